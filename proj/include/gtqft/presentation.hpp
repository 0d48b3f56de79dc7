#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gtqft {

/// One letter of a word: a generator used forwards or backwards.
struct Letter {
  int gen;
  bool inverse;

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.inverse == b.inverse;
  }
};

/// A composable sequence of generator letters, read in application order:
/// letters[0] is traversed first. Endpoints are stored explicitly so the
/// empty word at an object is representable.
struct Word {
  std::vector<Letter> letters;
  int src = -1;
  int tgt = -1;

  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word& a, const Word& b) {
    return a.src == b.src && a.tgt == b.tgt && a.letters == b.letters;
  }
};

struct ObjectInfo {
  std::string id;
  std::string label;

  friend bool operator==(const ObjectInfo& a, const ObjectInfo& b) {
    return a.id == b.id && a.label == b.label;
  }
};

struct Generator {
  std::string id;
  int src;
  int tgt;
  std::string label;

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.id == b.id && a.src == b.src && a.tgt == b.tgt && a.label == b.label;
  }
};

struct Relation {
  Word lhs;
  Word rhs;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

/// A finitely presented groupoid: objects, generating morphisms with
/// endpoints, and relations between composable words. Objects and
/// generators carry unique string ids; all word data is index-based.
class GroupoidPresentation {
public:
  int add_object(const std::string& id, const std::string& label = "");
  int add_generator(const std::string& id, int src, int tgt, const std::string& label = "");
  void add_relation(Word lhs, Word rhs);

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_generators() const { return static_cast<int>(generators_.size()); }
  const std::vector<ObjectInfo>& objects() const { return objects_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Relation>& relations() const { return relations_; }

  /// Index lookup by id; -1 when absent.
  int object_index(const std::string& id) const;
  int generator_index(const std::string& id) const;

  /// True when `id` names no existing object or generator.
  bool id_is_fresh(const std::string& id) const;

  friend bool operator==(const GroupoidPresentation& a, const GroupoidPresentation& b) {
    return a.objects_ == b.objects_ && a.generators_ == b.generators_ &&
           a.relations_ == b.relations_;
  }

private:
  std::vector<ObjectInfo> objects_;
  std::vector<Generator> generators_;
  std::vector<Relation> relations_;
  std::unordered_map<std::string, int> object_index_;
  std::unordered_map<std::string, int> generator_index_;
};

using PresentationPtr = std::shared_ptr<const GroupoidPresentation>;

/// Checks all structural invariants and returns human-readable violations
/// (empty means valid). Never throws.
std::vector<std::string> validate(const GroupoidPresentation& p);

/// True when the word's chain condition and declared endpoints hold in p.
bool word_is_valid(const GroupoidPresentation& p, const Word& w);

Word empty_word(int object);
Word generator_word(const GroupoidPresentation& p, int gen, bool inverse = false);

/// Builds a word from letters given in application order; endpoints are read
/// off the presentation and the chain condition is enforced.
Word make_word(const GroupoidPresentation& p, const std::vector<Letter>& letters,
               int object_if_empty = -1);

/// Cancels adjacent mutually inverse letters until none remain.
Word free_reduce(Word w);

/// w1 followed by w2 (so the categorical composite w2 . w1), freely reduced.
Word compose_words(const Word& w1, const Word& w2);

/// Letters reversed with orientations flipped; endpoints swapped.
Word invert_word(const Word& w);

/// A map of presentations: object map plus a target word per generator.
/// Well-definedness on relations is an obligation on the caller (it is
/// undecidable in general); g_consistency_check gives a necessary condition.
struct PresentationMap {
  PresentationPtr source;
  PresentationPtr target;
  std::vector<int> object_map;     // source object index -> target object index
  std::vector<Word> generator_map; // source generator index -> word in target
};

std::vector<std::string> validate(const PresentationMap& m);

PresentationMap identity_map(PresentationPtr p);

/// Letterwise substitution along m, freely reduced.
Word apply_map(const PresentationMap& m, const Word& w);

/// Composite `second . first` as a single map.
PresentationMap compose_maps(const PresentationMap& first, const PresentationMap& second);

struct CoproductResult {
  PresentationPtr presentation;
  PresentationMap inj_left;
  PresentationMap inj_right;
};

/// Disjoint union with ids renamed "a:..." / "b:...".
CoproductResult coproduct(PresentationPtr left, PresentationPtr right);

struct PushoutResult {
  PresentationPtr presentation;
  PresentationMap from_left;  // f.target -> pushout
  PresentationMap from_right; // g.target -> pushout
};

/// Pushout of f: Y -> M and g: Y -> N over their shared source Y. Objects
/// are the Set coequaliser of the object maps (union-find, minimal-index
/// representatives); generators are the disjoint union re-indexed through
/// the quotient; relations are both sides' relations plus one glueing
/// relation per generator of Y.
PushoutResult pushout(const PresentationMap& f, const PresentationMap& g);

struct BasepointExtension {
  PresentationPtr presentation;
  int new_object;
  int new_generator;
};

/// Free extension by one object and one connecting generator at `at`.
BasepointExtension add_basepoint(PresentationPtr p, int at, const std::string& label);

/// Connected components of the undirected (objects, generators) graph,
/// ordered by minimal member; members sorted.
std::vector<std::vector<int>> path_components(const GroupoidPresentation& p);

} // namespace gtqft
