#include "gtqft/hom_enum.hpp"

#include "gtqft/errors.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace gtqft {

int evaluate(const FiniteGroup& G, const GroupoidHom& h, const Word& w) {
  int acc = G.identity();
  for (const Letter& l : w.letters) {
    if (l.gen < 0 || l.gen >= static_cast<int>(h.images.size()))
      throw UnknownGeneratorError("evaluate: unknown generator index " + std::to_string(l.gen));
    int g = h.images[l.gen];
    if (l.inverse) g = G.inv(g);
    acc = G.mul(g, acc); // later letters act on the left
  }
  return acc;
}

namespace {

struct Searcher {
  const GroupoidPresentation& p;
  const FiniteGroup& G;
  // relations_at[k]: relations whose last-mentioned generator is k.
  std::vector<std::vector<int>> relations_at;
  GroupoidHom partial;
  std::vector<GroupoidHom>* out;

  Searcher(const GroupoidPresentation& pres, const FiniteGroup& grp,
           std::vector<GroupoidHom>* sink)
      : p(pres), G(grp), out(sink) {
    relations_at.resize(p.num_generators());
    partial.images.assign(p.num_generators(), -1);
    for (std::size_t r = 0; r < p.relations().size(); ++r) {
      int last = -1;
      for (const Letter& l : p.relations()[r].lhs.letters) last = std::max(last, l.gen);
      for (const Letter& l : p.relations()[r].rhs.letters) last = std::max(last, l.gen);
      if (last >= 0) relations_at[last].push_back(static_cast<int>(r));
    }
  }

  bool relations_hold_at(int k) const {
    for (int r : relations_at[k]) {
      const Relation& rel = p.relations()[r];
      if (evaluate(G, partial, rel.lhs) != evaluate(G, partial, rel.rhs)) return false;
    }
    return true;
  }

  void search(int k) {
    if (k == p.num_generators()) {
      out->push_back(partial);
      return;
    }
    for (int v = 0; v < G.order(); ++v) {
      partial.images[k] = v;
      if (relations_hold_at(k)) search(k + 1);
    }
    partial.images[k] = -1;
  }
};

bool generator_free_relations_hold(const GroupoidPresentation& p, const FiniteGroup& G) {
  GroupoidHom none{std::vector<int>(p.num_generators(), -1)};
  for (const Relation& rel : p.relations()) {
    if (!rel.lhs.letters.empty() || !rel.rhs.letters.empty()) continue;
    if (evaluate(G, none, rel.lhs) != evaluate(G, none, rel.rhs)) return false;
  }
  return true;
}

void check_budget(const GroupoidPresentation& p, const FiniteGroup& G, const EnumOptions& opts) {
  long double candidates = 1;
  for (int k = 0; k < p.num_generators(); ++k) {
    candidates *= G.order();
    if (candidates > static_cast<long double>(opts.budget))
      throw BudgetExceededError("enumeration needs |G|^" + std::to_string(p.num_generators()) +
                                " = " + std::to_string(G.order()) + "^" +
                                std::to_string(p.num_generators()) + " candidates, budget is " +
                                std::to_string(opts.budget));
  }
}

} // namespace

std::vector<GroupoidHom> enumerate_homs(const GroupoidPresentation& p, const FiniteGroup& G,
                                        const EnumOptions& opts) {
  check_budget(p, G, opts);
  if (p.num_generators() == 0) {
    if (!generator_free_relations_hold(p, G)) return {};
    return {GroupoidHom{}};
  }

  if (opts.threads <= 1) {
    std::vector<GroupoidHom> out;
    Searcher s(p, G, &out);
    s.search(0);
    return out;
  }

  // Split on the first generator's value; each slot is filled independently
  // and concatenated in value order, so the merge is order-preserving.
  std::vector<std::vector<GroupoidHom>> slots(G.order());
  const int workers = std::min(opts.threads, G.order());
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (int v = w; v < G.order(); v += workers) {
        Searcher s(p, G, &slots[v]);
        s.partial.images[0] = v;
        if (s.relations_hold_at(0)) s.search(1);
      }
    });
  }
  for (auto& t : pool) t.join();
  std::vector<GroupoidHom> out;
  for (auto& slot : slots)
    out.insert(out.end(), std::make_move_iterator(slot.begin()),
               std::make_move_iterator(slot.end()));
  return out;
}

std::optional<std::vector<int>> natural_iso_witness(const GroupoidPresentation& p,
                                                    const FiniteGroup& G, const GroupoidHom& f,
                                                    const GroupoidHom& g) {
  if (f.images.size() != static_cast<std::size_t>(p.num_generators()) ||
      g.images.size() != static_cast<std::size_t>(p.num_generators()))
    throw MismatchedPresentationsError("homs do not match the presentation's generators");

  // Spanning forest: adjacency by generators, edges traversable both ways.
  std::vector<std::vector<std::pair<int, int>>> adj(p.num_objects()); // (neighbor, gen)
  for (int a = 0; a < p.num_generators(); ++a) {
    const Generator& gen = p.generators()[a];
    adj[gen.src].push_back({gen.tgt, a});
    adj[gen.tgt].push_back({gen.src, a});
  }

  std::vector<int> eta(p.num_objects(), -1);
  for (const std::vector<int>& comp : path_components(p)) {
    const int root = comp[0];
    bool found = false;
    for (int root_val = 0; root_val < G.order() && !found; ++root_val) {
      std::vector<int> local(p.num_objects(), -1);
      local[root] = root_val;
      std::vector<int> stack{root};
      while (!stack.empty()) {
        const int o = stack.back();
        stack.pop_back();
        for (auto [nb, a] : adj[o]) {
          if (local[nb] >= 0) continue;
          const Generator& gen = p.generators()[a];
          // eta[tgt] = g(a) eta[src] f(a)^-1, solved in whichever direction
          // the forest reaches the edge.
          if (o == gen.src)
            local[gen.tgt] = G.mul(G.mul(g.images[a], local[o]), G.inv(f.images[a]));
          else
            local[gen.src] = G.mul(G.mul(G.inv(g.images[a]), local[o]), f.images[a]);
          stack.push_back(nb);
        }
      }
      bool ok = true;
      for (int a = 0; a < p.num_generators() && ok; ++a) {
        const Generator& gen = p.generators()[a];
        if (local[gen.src] < 0 || local[gen.tgt] < 0) continue; // other component
        ok = g.images[a] == G.mul(G.mul(local[gen.tgt], f.images[a]), G.inv(local[gen.src]));
      }
      // Only accept assignments touching this component.
      if (ok) {
        for (int o : comp) eta[o] = local[o] >= 0 ? local[o] : G.identity();
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return eta;
}

NatPartition nat_classes(const GroupoidPresentation& p, const FiniteGroup& G,
                         const EnumOptions& opts) {
  NatPartition part;
  part.homs = enumerate_homs(p, G, opts);
  part.class_of.assign(part.homs.size(), -1);
  for (std::size_t i = 0; i < part.homs.size(); ++i) {
    int cls = -1;
    for (std::size_t c = 0; c < part.classes.size() && cls < 0; ++c)
      if (natural_iso_witness(p, G, part.classes[c].rep, part.homs[i])) cls = static_cast<int>(c);
    if (cls < 0) {
      // Lex scan order makes the first member of a class its minimum.
      cls = static_cast<int>(part.classes.size());
      part.classes.push_back({part.homs[i], 0});
    }
    part.classes[cls].size += 1;
    part.class_of[i] = cls;
  }
  return part;
}

GroupoidHom theta_extension(const GroupoidHom& f, int x) {
  GroupoidHom out = f;
  out.images.push_back(x);
  return out;
}

GroupoidHom restrict_along(const PresentationMap& m, const FiniteGroup& G, const GroupoidHom& h) {
  GroupoidHom out;
  out.images.reserve(m.generator_map.size());
  for (const Word& w : m.generator_map) out.images.push_back(evaluate(G, h, w));
  return out;
}

ConsistencyResult g_consistency_check(const PresentationMap& m, const FiniteGroup& G,
                                      const EnumOptions& opts) {
  const auto homs = enumerate_homs(*m.target, G, opts);
  for (std::size_t i = 0; i < homs.size(); ++i) {
    for (std::size_t r = 0; r < m.source->relations().size(); ++r) {
      const Relation& rel = m.source->relations()[r];
      const int lhs = evaluate(G, homs[i], apply_map(m, rel.lhs));
      const int rhs = evaluate(G, homs[i], apply_map(m, rel.rhs));
      if (lhs != rhs)
        return {false, "target hom #" + std::to_string(i) + " violates source relation " +
                           std::to_string(r) + " (" + std::to_string(lhs) +
                           " != " + std::to_string(rhs) + ")"};
    }
  }
  return {};
}

} // namespace gtqft
