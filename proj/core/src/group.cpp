#include "blockdesc/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "blockdesc/errors.hpp"

namespace blockdesc {

namespace {

std::vector<std::uint32_t> perm_compose(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
  // (a * b)(x) = a(b(x))
  std::vector<std::uint32_t> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

}  // namespace

GroupPtr Group::from_perm_gens(const std::vector<std::vector<std::uint32_t>>& gens,
                               std::uint32_t max_order) {
  if (gens.empty()) {
    // trivial group
    std::vector<std::vector<std::uint32_t>> table{{0}};
    return from_cayley(table);
  }
  std::size_t deg = 0;
  for (const auto& g : gens) deg = std::max(deg, g.size());
  // normalize to 0-based of common degree
  std::vector<std::vector<std::uint32_t>> gs;
  for (const auto& g : gens) {
    std::vector<std::uint32_t> h(deg);
    std::vector<char> seen(deg, 0);
    for (std::size_t i = 0; i < deg; ++i) {
      std::uint32_t img = i < g.size() ? g[i] : std::uint32_t(i + 1);
      if (img < 1 || img > deg) throw InputError("permutation image out of range");
      h[i] = img - 1;
      if (seen[h[i]]++) throw InputError("generator is not a permutation");
    }
    gs.push_back(std::move(h));
  }
  std::vector<std::uint32_t> identity(deg);
  std::iota(identity.begin(), identity.end(), 0);

  auto g = std::shared_ptr<Group>(new Group());
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  g->perms_.push_back(identity);
  index[identity] = 0;
  g->bfs_.push_back({0, 0});
  for (std::uint32_t e = 0; e < g->perms_.size(); ++e) {
    for (std::uint32_t gi = 0; gi < gs.size(); ++gi) {
      auto prod = perm_compose(g->perms_[e], gs[gi]);  // e * gen
      if (!index.count(prod)) {
        if (g->perms_.size() >= max_order)
          throw InputError("group order exceeds the bound " + std::to_string(max_order));
        index[prod] = std::uint32_t(g->perms_.size());
        g->perms_.push_back(prod);
        g->bfs_.push_back({e, gi});
      }
    }
  }
  g->n_ = std::uint32_t(g->perms_.size());
  g->table_.resize(std::size_t(g->n_) * g->n_);
  for (std::uint32_t a = 0; a < g->n_; ++a)
    for (std::uint32_t b = 0; b < g->n_; ++b)
      g->table_[a * g->n_ + b] = index.at(perm_compose(g->perms_[a], g->perms_[b]));
  // generator indices
  for (const auto& gen : gs) g->gens_.push_back(index.at(gen));
  g->finish_init();
  return g;
}

GroupPtr Group::from_cayley(const std::vector<std::vector<std::uint32_t>>& table) {
  auto g = std::shared_ptr<Group>(new Group());
  g->n_ = std::uint32_t(table.size());
  if (g->n_ == 0) throw InputError("empty Cayley table");
  g->table_.resize(std::size_t(g->n_) * g->n_);
  for (std::uint32_t i = 0; i < g->n_; ++i) {
    if (table[i].size() != g->n_) throw InputError("Cayley table is not square");
    for (std::uint32_t j = 0; j < g->n_; ++j) {
      if (table[i][j] >= g->n_) throw InputError("Cayley table entry out of range");
      g->table_[i * g->n_ + j] = table[i][j];
    }
  }
  for (std::uint32_t i = 0; i < g->n_; ++i)
    if (g->mul(0, i) != i || g->mul(i, 0) != i)
      throw InputError("Cayley table: element 0 is not an identity");
  // closure is structural; validate associativity on a deterministic sample
  std::uint32_t n = g->n_;
  std::uint32_t step = n > 16 ? n / 16 : 1;
  for (std::uint32_t a = 0; a < n; a += step)
    for (std::uint32_t b = 0; b < n; b += step)
      for (std::uint32_t c = 0; c < n; c += step)
        if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
          throw InputError("Cayley table is not associative");
  // greedy generating set
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  std::uint32_t count = 1;
  while (count < n) {
    std::uint32_t pick = 0;
    for (std::uint32_t e = 1; e < n; ++e)
      if (!reached[e]) {
        pick = e;
        break;
      }
    g->gens_.push_back(pick);
    // close
    std::vector<std::uint32_t> queue{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (std::uint32_t gi : g->gens_) {
        std::uint32_t x = g->mul(queue[qi], gi);
        if (!seen[x]) {
          seen[x] = 1;
          queue.push_back(x);
        }
      }
    reached = seen;
    count = std::uint32_t(queue.size());
  }
  if (g->gens_.empty()) g->gens_.push_back(0);
  // BFS words for the chosen generators
  g->bfs_.assign(n, {UINT32_MAX, UINT32_MAX});
  g->bfs_[0] = {0, 0};
  std::vector<std::uint32_t> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (std::uint32_t gi = 0; gi < g->gens_.size(); ++gi) {
      std::uint32_t x = g->mul(queue[qi], g->gens_[gi]);
      if (g->bfs_[x].first == UINT32_MAX && x != 0) {
        g->bfs_[x] = {queue[qi], gi};
        queue.push_back(x);
      }
    }
  g->finish_init();
  return g;
}

void Group::finish_init() {
  inv_.assign(n_, 0);
  for (std::uint32_t a = 0; a < n_; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < n_; ++b)
      if (mul(a, b) == 0) {
        if (mul(b, a) != 0) throw InputError("group: one-sided inverse");
        inv_[a] = b;
        found = true;
        break;
      }
    if (!found) throw InputError("group: element with no inverse");
  }
  // left-multiplication BFS words
  lbfs_.assign(n_, {UINT32_MAX, UINT32_MAX});
  lbfs_[0] = {0, 0};
  std::vector<std::uint32_t> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (std::uint32_t gi = 0; gi < gens_.size(); ++gi) {
      std::uint32_t x = mul(gens_[gi], queue[qi]);
      if (x != 0 && lbfs_[x].first == UINT32_MAX) {
        lbfs_[x] = {queue[qi], gi};
        queue.push_back(x);
      }
    }
  if (queue.size() != n_) throw InputError("group: generators do not generate");
}

std::uint32_t Group::element_order(std::uint32_t a) const {
  std::uint32_t x = a, o = 1;
  while (x != 0) {
    x = mul(x, a);
    ++o;
  }
  return o;
}

const std::vector<std::vector<std::uint32_t>>& Group::conjugacy_classes() const {
  if (!classes_.empty()) return classes_;
  class_of_.assign(n_, UINT32_MAX);
  for (std::uint32_t e = 0; e < n_; ++e) {
    if (class_of_[e] != UINT32_MAX) continue;
    std::vector<std::uint32_t> cls;
    std::uint32_t ci = std::uint32_t(classes_.size());
    for (std::uint32_t g = 0; g < n_; ++g) {
      std::uint32_t x = conj(g, e);
      if (class_of_[x] == UINT32_MAX) {
        class_of_[x] = ci;
        cls.push_back(x);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
  return classes_;
}

std::uint32_t Group::class_of(std::uint32_t e) const {
  conjugacy_classes();
  return class_of_[e];
}

std::string Group::describe() const {
  std::ostringstream os;
  os << "group of order " << n_ << " with " << gens_.size() << " generators";
  return os.str();
}

Subgroup make_subgroup(GroupPtr g, std::vector<std::uint32_t> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Subgroup s;
  s.parent = g;
  s.elems = std::move(elems);
  s.mask.assign(g->order(), 0);
  for (auto e : s.elems) s.mask[e] = 1;
  if (s.elems.empty() || s.elems[0] != 0) throw InputError("subgroup must contain the identity");
  return s;
}

Subgroup subgroup_closure(GroupPtr g, const std::vector<std::uint32_t>& gens) {
  std::vector<char> seen(g->order(), 0);
  std::vector<std::uint32_t> queue{0};
  seen[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (auto gen : gens) {
      std::uint32_t x = g->mul(queue[qi], gen);
      if (!seen[x]) {
        seen[x] = 1;
        queue.push_back(x);
      }
      x = g->mul(gen, queue[qi]);
      if (!seen[x]) {
        seen[x] = 1;
        queue.push_back(x);
      }
    }
  return make_subgroup(g, queue);
}

Subgroup trivial_subgroup(GroupPtr g) { return make_subgroup(g, {0}); }

Subgroup full_subgroup(GroupPtr g) {
  std::vector<std::uint32_t> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return make_subgroup(g, all);
}

bool is_subgroup(const Subgroup& s) {
  for (auto a : s.elems)
    for (auto b : s.elems)
      if (!s.contains(s.parent->mul(a, b))) return false;
  return !s.elems.empty() && s.elems[0] == 0;
}

bool is_normal(const Subgroup& s) {
  const auto& g = *s.parent;
  for (std::uint32_t x = 0; x < g.order(); ++x)
    for (auto e : s.elems)
      if (!s.contains(g.conj(x, e))) return false;
  return true;
}

bool subgroup_is_abelian(const Subgroup& s) {
  for (auto a : s.elems)
    for (auto b : s.elems)
      if (s.parent->mul(a, b) != s.parent->mul(b, a)) return false;
  return true;
}

std::vector<std::uint32_t> subgroup_generators(const Subgroup& s) {
  std::vector<std::uint32_t> gens;
  Subgroup cur = trivial_subgroup(s.parent);
  for (auto e : s.elems) {
    if (cur.contains(e)) continue;
    gens.push_back(e);
    auto g2 = gens;
    cur = subgroup_closure(s.parent, g2);
    if (cur.order() == s.order()) break;
  }
  return gens;
}

Subgroup centralizer(GroupPtr g, const std::vector<std::uint32_t>& subset) {
  std::vector<std::uint32_t> c;
  for (std::uint32_t x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (auto e : subset)
      if (g->mul(x, e) != g->mul(e, x)) {
        ok = false;
        break;
      }
    if (ok) c.push_back(x);
  }
  return make_subgroup(g, c);
}

Subgroup centralizer(const Subgroup& s) { return centralizer(s.parent, s.elems); }

Subgroup normalizer(const Subgroup& s) {
  const auto& g = *s.parent;
  std::vector<std::uint32_t> n;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto e : s.elems)
      if (!s.contains(g.conj(x, e))) {
        ok = false;
        break;
      }
    if (ok) n.push_back(x);
  }
  return make_subgroup(s.parent, n);
}

Subgroup group_center(GroupPtr g) {
  std::vector<std::uint32_t> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return centralizer(g, all);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent) throw InputError("intersect: different parents");
  std::vector<std::uint32_t> c;
  for (auto e : a.elems)
    if (b.contains(e)) c.push_back(e);
  return make_subgroup(a.parent, c);
}

bool conjugate_subgroups(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent) return false;
  if (a.order() != b.order()) return false;
  const auto& g = *a.parent;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto e : a.elems)
      if (!b.contains(g.conj(x, e))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

std::vector<Subgroup> normal_subgroups(GroupPtr g) {
  const auto& classes = g->conjugacy_classes();
  // grow from the trivial subgroup by adjoining conjugacy classes and closing
  std::vector<Subgroup> found{trivial_subgroup(g)};
  std::vector<std::vector<std::uint32_t>> seen_sets{found[0].elems};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& cls : classes) {
      if (found[i].contains(cls[0])) continue;
      std::vector<std::uint32_t> gens = found[i].elems;
      gens.insert(gens.end(), cls.begin(), cls.end());
      Subgroup h = subgroup_closure(g, gens);
      if (std::find(seen_sets.begin(), seen_sets.end(), h.elems) == seen_sets.end()) {
        seen_sets.push_back(h.elems);
        found.push_back(h);
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& x, const Subgroup& y) {
    return x.elems.size() != y.elems.size() ? x.elems.size() < y.elems.size()
                                            : x.elems < y.elems;
  });
  return found;
}

std::uint32_t p_part(std::uint32_t n, std::uint32_t p) {
  std::uint32_t r = 1;
  while (n % p == 0) {
    r *= p;
    n /= p;
  }
  return r;
}

Subgroup sylow_subgroup(GroupPtr g, std::uint32_t p) {
  std::uint32_t target = p_part(g->order(), p);
  Subgroup P = trivial_subgroup(g);
  while (P.order() < target) {
    Subgroup N = normalizer(P);
    bool grew = false;
    for (auto x : N.elems) {
      if (P.contains(x)) continue;
      std::uint32_t o = g->element_order(x);
      if (p_part(o, p) != o) continue;  // not a p-element
      // replace x by a power whose p-th power lands in P
      std::uint32_t z = x;
      std::vector<std::uint32_t> chain{z};
      while (!P.contains(z)) {
        std::uint32_t zp = z;
        for (std::uint32_t i = 1; i < p; ++i) zp = g->mul(zp, z);
        z = zp;
        chain.push_back(z);
      }
      std::uint32_t pick = chain[chain.size() >= 2 ? chain.size() - 2 : 0];
      if (P.contains(pick)) continue;
      auto gens = subgroup_generators(P);
      gens.push_back(pick);
      Subgroup P2 = subgroup_closure(g, gens);
      if (P2.order() == P.order() * p) {
        P = P2;
        grew = true;
        break;
      }
    }
    if (!grew) throw InternalInconsistency("sylow ascent failed");
  }
  return P;
}

std::pair<Subgroup, bool> p_core_complement(GroupPtr g, std::uint32_t p) {
  auto normals = normal_subgroups(g);
  Subgroup core = trivial_subgroup(g);
  for (const auto& n : normals)
    if (n.order() % p != 0 && n.order() > core.order()) core = n;
  // maximality: the p'-core contains every normal p'-subgroup
  for (const auto& n : normals)
    if (n.order() % p != 0)
      for (auto e : n.elems)
        if (!core.contains(e))
          throw InternalInconsistency("p-core does not contain a normal p'-subgroup");
  bool nilp = std::uint64_t(core.order()) * p_part(g->order(), p) == g->order();
  return {core, nilp};
}

std::vector<Subgroup> p_subgroups_up_to_conjugacy(GroupPtr g, std::uint32_t p) {
  std::vector<Subgroup> reps{trivial_subgroup(g)};
  std::vector<Subgroup> frontier = reps;
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    std::vector<std::vector<std::uint32_t>> seen;
    for (const auto& P : frontier) {
      Subgroup N = normalizer(P);
      for (auto x : N.elems) {
        if (P.contains(x)) continue;
        std::uint32_t o = g->element_order(x);
        if (p_part(o, p) != o) continue;
        std::uint32_t z = x;
        std::vector<std::uint32_t> chain{z};
        while (!P.contains(z)) {
          std::uint32_t zp = z;
          for (std::uint32_t i = 1; i < p; ++i) zp = g->mul(zp, z);
          z = zp;
          chain.push_back(z);
        }
        std::uint32_t pick = chain[chain.size() >= 2 ? chain.size() - 2 : 0];
        if (P.contains(pick)) continue;
        auto gens = subgroup_generators(P);
        gens.push_back(pick);
        Subgroup P2 = subgroup_closure(g, gens);
        if (P2.order() != P.order() * p) continue;
        if (std::find(seen.begin(), seen.end(), P2.elems) != seen.end()) continue;
        seen.push_back(P2.elems);
        next.push_back(P2);
      }
    }
    // dedupe up to conjugacy
    std::vector<Subgroup> new_reps;
    for (const auto& h : next) {
      bool dup = false;
      for (const auto& r : new_reps)
        if (conjugate_subgroups(h, r)) {
          dup = true;
          break;
        }
      if (!dup) new_reps.push_back(h);
    }
    for (const auto& r : new_reps) reps.push_back(r);
    frontier = std::move(new_reps);
  }
  std::sort(reps.begin(), reps.end(), [](const Subgroup& x, const Subgroup& y) {
    return x.elems.size() != y.elems.size() ? x.elems.size() < y.elems.size()
                                            : x.elems < y.elems;
  });
  return reps;
}

std::vector<Subgroup> subgroups_of_p_group(const Subgroup& p_grp) {
  // all subgroups of a small p-group, by closure enumeration over subsets of
  // generators drawn from the member list (groups here are tiny)
  GroupPtr g = p_grp.parent;
  std::vector<Subgroup> out{trivial_subgroup(g)};
  std::vector<std::vector<std::uint32_t>> seen{out[0].elems};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto e : p_grp.elems) {
      if (out[i].contains(e)) continue;
      auto gens = subgroup_generators(out[i]);
      gens.push_back(e);
      Subgroup h = subgroup_closure(g, gens);
      bool inside = true;
      for (auto x : h.elems)
        if (!p_grp.contains(x)) {
          inside = false;
          break;
        }
      if (!inside) continue;
      if (std::find(seen.begin(), seen.end(), h.elems) == seen.end()) {
        seen.push_back(h.elems);
        out.push_back(h);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    return x.elems.size() != y.elems.size() ? x.elems.size() < y.elems.size()
                                            : x.elems < y.elems;
  });
  return out;
}

SubgroupAsGroup subgroup_as_group(const Subgroup& s) {
  SubgroupAsGroup out;
  out.to_parent = s.elems;
  out.from_parent.assign(s.parent->order(), -1);
  for (std::size_t i = 0; i < s.elems.size(); ++i) out.from_parent[s.elems[i]] = std::int64_t(i);
  std::vector<std::vector<std::uint32_t>> table(s.elems.size(),
                                                std::vector<std::uint32_t>(s.elems.size()));
  for (std::size_t i = 0; i < s.elems.size(); ++i)
    for (std::size_t j = 0; j < s.elems.size(); ++j) {
      std::uint32_t prod = s.parent->mul(s.elems[i], s.elems[j]);
      std::int64_t idx = out.from_parent[prod];
      if (idx < 0) throw InputError("subgroup_as_group: set not closed");
      table[i][j] = std::uint32_t(idx);
    }
  out.grp = Group::from_cayley(table);
  return out;
}

std::uint32_t ProductGroup::pair(std::uint32_t a, std::uint32_t b) const {
  return a * right->order() + b;
}

std::pair<std::uint32_t, std::uint32_t> ProductGroup::unpair(std::uint32_t e) const {
  return {e / right->order(), e % right->order()};
}

ProductGroup direct_product(GroupPtr a, GroupPtr b) {
  std::uint32_t na = a->order(), nb = b->order();
  std::vector<std::vector<std::uint32_t>> table(std::size_t(na) * nb,
                                                std::vector<std::uint32_t>(std::size_t(na) * nb));
  for (std::uint32_t a1 = 0; a1 < na; ++a1)
    for (std::uint32_t b1 = 0; b1 < nb; ++b1)
      for (std::uint32_t a2 = 0; a2 < na; ++a2)
        for (std::uint32_t b2 = 0; b2 < nb; ++b2)
          table[a1 * nb + b1][a2 * nb + b2] = a->mul(a1, a2) * nb + b->mul(b1, b2);
  ProductGroup pg;
  pg.grp = Group::from_cayley(table);
  pg.left = a;
  pg.right = b;
  return pg;
}

QuotientGroup quotient_group(GroupPtr g, const Subgroup& n) {
  if (!is_normal(n)) throw InputError("quotient by a non-normal subgroup");
  std::uint32_t order = g->order();
  std::vector<std::uint32_t> coset_of(order, UINT32_MAX);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t e = 0; e < order; ++e) {
    if (coset_of[e] != UINT32_MAX) continue;
    std::uint32_t ci = std::uint32_t(reps.size());
    reps.push_back(e);
    for (auto h : n.elems) coset_of[g->mul(e, h)] = ci;
  }
  std::vector<std::vector<std::uint32_t>> table(reps.size(),
                                                std::vector<std::uint32_t>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j)
      table[i][j] = coset_of[g->mul(reps[i], reps[j])];
  QuotientGroup q;
  q.grp = Group::from_cayley(table);
  q.proj = std::move(coset_of);
  return q;
}

GroupHom hom_from_gen_images(GroupPtr src, GroupPtr dst,
                             const std::vector<std::uint32_t>& gen_images) {
  if (gen_images.size() != src->generators().size())
    throw InputError("hom_from_gen_images: one image per generator required");
  GroupHom h;
  h.src = src;
  h.dst = dst;
  h.image.assign(src->order(), UINT32_MAX);
  h.image[0] = 0;
  // BFS order guarantees parents are resolved first
  std::vector<std::uint32_t> order_bfs;
  order_bfs.push_back(0);
  std::vector<char> seen(src->order(), 0);
  seen[0] = 1;
  for (std::size_t qi = 0; qi < order_bfs.size(); ++qi)
    for (std::uint32_t gi = 0; gi < src->generators().size(); ++gi) {
      std::uint32_t x = src->mul(order_bfs[qi], src->generators()[gi]);
      if (!seen[x]) {
        seen[x] = 1;
        h.image[x] = dst->mul(h.image[order_bfs[qi]], gen_images[gi]);
        order_bfs.push_back(x);
      }
    }
  if (!hom_is_valid(h)) throw InputError("generator images do not extend to a homomorphism");
  return h;
}

bool hom_is_valid(const GroupHom& h) {
  for (std::uint32_t a = 0; a < h.src->order(); ++a)
    for (std::uint32_t b = 0; b < h.src->order(); ++b)
      if (h.image[h.src->mul(a, b)] != h.dst->mul(h.image[a], h.image[b])) return false;
  return true;
}

TwistedDiagonal twisted_diagonal(GroupPtr s, const Subgroup& q, const Subgroup& n) {
  if (q.parent != s || n.parent != s) throw InputError("twisted_diagonal: subgroups of S required");
  if (!is_normal(n)) throw InputError("twisted_diagonal: N must be normal in S");
  // S = NQ
  std::vector<char> prod_mask(s->order(), 0);
  std::uint32_t count = 0;
  for (auto ne : n.elems)
    for (auto qe : q.elems) {
      std::uint32_t x = s->mul(ne, qe);
      if (!prod_mask[x]) {
        prod_mask[x] = 1;
        ++count;
      }
    }
  if (count != s->order()) throw InputError("twisted_diagonal: S != NQ");

  TwistedDiagonal td;
  td.q_standalone = subgroup_as_group(q);
  td.product = direct_product(s, td.q_standalone.grp);
  std::vector<std::uint32_t> delta_elems;
  for (auto ne : n.elems)
    for (std::size_t qi = 0; qi < q.elems.size(); ++qi) {
      std::uint32_t nq = s->mul(ne, q.elems[qi]);
      delta_elems.push_back(td.product.pair(nq, std::uint32_t(qi)));
    }
  td.delta = make_subgroup(td.product.grp, delta_elems);
  if (!is_subgroup(td.delta)) throw InternalInconsistency("twisted diagonal is not a subgroup");
  return td;
}

Cosets left_cosets(GroupPtr g, const Subgroup& h) {
  Cosets c;
  c.coset_of.assign(g->order(), UINT32_MAX);
  for (std::uint32_t e = 0; e < g->order(); ++e) {
    if (c.coset_of[e] != UINT32_MAX) continue;
    std::uint32_t ci = std::uint32_t(c.reps.size());
    c.reps.push_back(e);
    for (auto x : h.elems) c.coset_of[g->mul(e, x)] = ci;
  }
  return c;
}

}  // namespace blockdesc
