#pragma once

#include "gtqft/finite_group.hpp"
#include "gtqft/presentation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gtqft {

/// A groupoid map into the one-object groupoid on G: one element per
/// generator (every object necessarily lands on the unique object).
struct GroupoidHom {
  std::vector<int> images; // generator index -> element index

  friend bool operator==(const GroupoidHom& a, const GroupoidHom& b) {
    return a.images == b.images;
  }
  friend bool operator<(const GroupoidHom& a, const GroupoidHom& b) {
    return a.images < b.images;
  }
};

struct EnumOptions {
  // Candidate budget: enumeration refuses when |G|^#generators exceeds it.
  std::int64_t budget = 100'000'000;
  int threads = 1;
};

/// Product of letter images in application order; inverse letters contribute
/// the element inverse. Empty word evaluates to the identity.
int evaluate(const FiniteGroup& G, const GroupoidHom& h, const Word& w);

/// All relation-satisfying assignments, in lexicographic order over the
/// fixed generator ordering. Backtracking checks each relation as soon as
/// every generator it mentions is assigned. With threads > 1 the search is
/// split on the first generator's value and merged back in order, so the
/// result is identical for every thread count.
std::vector<GroupoidHom> enumerate_homs(const GroupoidPresentation& p, const FiniteGroup& G,
                                        const EnumOptions& opts = {});

/// Natural transformation f => g, if any: elements eta per object with
/// g(a) = eta[tgt] * f(a) * eta[src]^-1 for every generator. The search
/// picks one root per path component, propagates along a spanning forest
/// and verifies the remaining generators, trying root values in element
/// order so the returned witness is deterministic.
std::optional<std::vector<int>> natural_iso_witness(const GroupoidPresentation& p,
                                                    const FiniteGroup& G, const GroupoidHom& f,
                                                    const GroupoidHom& g);

struct NatClass {
  GroupoidHom rep; // lexicographically minimal member
  std::size_t size;
};

/// Homs partitioned into natural-isomorphism classes.
struct NatPartition {
  std::vector<GroupoidHom> homs;   // as enumerate_homs
  std::vector<NatClass> classes;   // ordered by canonical representative
  std::vector<int> class_of;       // per hom
};

NatPartition nat_classes(const GroupoidPresentation& p, const FiniteGroup& G,
                         const EnumOptions& opts = {});

/// Extension of f along add_basepoint: the new generator (last index of the
/// extended presentation) is sent to x.
GroupoidHom theta_extension(const GroupoidHom& f, int x);

/// Pullback of a hom on m.target to a hom on m.source.
GroupoidHom restrict_along(const PresentationMap& m, const FiniteGroup& G, const GroupoidHom& h);

struct ConsistencyResult {
  bool ok = true;
  std::string counterexample; // first violation, empty when ok
};

/// Necessary condition for m to be well defined on relations: every hom of
/// the target must equalize the images of every source relation.
ConsistencyResult g_consistency_check(const PresentationMap& m, const FiniteGroup& G,
                                      const EnumOptions& opts = {});

} // namespace gtqft
