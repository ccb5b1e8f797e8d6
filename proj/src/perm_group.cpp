#include "profgrp/perm_group.hpp"

#include <deque>
#include <random>
#include <unordered_map>

#include "profgrp/error.hpp"

namespace profgrp {

PermGroup::PermGroup(std::vector<Perm> generators, uint32_t degree)
    : gens_(std::move(generators)), degree_(degree), lazy_(new Lazy) {
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw Error("generator degree mismatch");
}

PermGroup::PermGroup(std::vector<Perm> generators)
    : PermGroup(
          [&generators]() -> std::vector<Perm> {
            if (generators.empty()) throw Error("degree required for the trivial group");
            return std::move(generators);
          }(),
          0) {
  degree_ = gens_[0].degree();
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw Error("generator degree mismatch");
}

void PermGroup::rebuild_orbit(Level& lv) const {
  lv.orbit.clear();
  lv.where.assign(degree_, -1);
  lv.edge_gen.clear();
  lv.edge_from.clear();
  lv.orbit.push_back(lv.beta);
  lv.where[lv.beta] = 0;
  lv.edge_gen.push_back(-1);
  lv.edge_from.push_back(lv.beta);
  for (size_t qi = 0; qi < lv.orbit.size(); ++qi) {
    uint32_t x = lv.orbit[qi];
    for (size_t s = 0; s < lv.gens.size(); ++s) {
      uint32_t y = lv.gens[s][x];
      if (lv.where[y] < 0) {
        lv.where[y] = int32_t(lv.orbit.size());
        lv.orbit.push_back(y);
        lv.edge_gen.push_back(int32_t(s));
        lv.edge_from.push_back(x);
      }
    }
  }
}

Perm PermGroup::transversal(const Level& lv, uint32_t point, std::vector<int32_t>* word) const {
  std::vector<int32_t> path;  // strong generator indices, point back to root
  uint32_t x = point;
  while (lv.edge_gen[lv.where[x]] >= 0) {
    path.push_back(lv.edge_gen[lv.where[x]]);
    x = lv.edge_from[lv.where[x]];
  }
  Perm u(degree_);
  for (size_t i = path.size(); i-- > 0;) {
    u = u * lv.gens[path[i]];
    if (word) word->insert(word->end(), lv.words[path[i]].begin(), lv.words[path[i]].end());
  }
  return u;
}

Perm PermGroup::sift(Perm g, size_t from, std::vector<int32_t>* word) const {
  auto& levels = lazy_->levels;
  for (size_t i = from; i < levels.size(); ++i) {
    const Level& lv = levels[i];
    uint32_t delta = g[lv.beta];
    if (delta == lv.beta) continue;
    if (lv.where[delta] < 0) return g;
    std::vector<int32_t> uw;
    Perm u = transversal(lv, delta, word ? &uw : nullptr);
    g = g * u.inverse();
    if (word)
      for (size_t t = uw.size(); t-- > 0;) word->push_back(-uw[t]);
  }
  return g;
}

void PermGroup::build() const {
  std::lock_guard<std::mutex> lock(lazy_->mu);
  if (lazy_->built) return;
  auto& levels = lazy_->levels;

  auto first_moved = [this](const Perm& g) -> uint32_t {
    for (uint32_t i = 0; i < degree_; ++i)
      if (g[i] != i) return i;
    return degree_;
  };

  auto add_at = [&](const Perm& h, const std::vector<int32_t>& word) -> size_t {
    // h fixes the base points of every level it sifted through; attach it at
    // the first level whose base it moves, extending the base if needed.
    size_t j = 0;
    while (j < levels.size() && h[levels[j].beta] == levels[j].beta) ++j;
    if (j == levels.size()) {
      Level lv;
      lv.beta = first_moved(h);
      levels.push_back(std::move(lv));
    }
    levels[j].gens.push_back(h);
    levels[j].words.push_back(word);
    rebuild_orbit(levels[j]);
    return j;
  };

  for (size_t gi = 0; gi < gens_.size(); ++gi) {
    if (gens_[gi].is_identity()) continue;
    std::vector<int32_t> word{int32_t(gi + 1)};
    Perm h = sift(gens_[gi], 0, &word);
    if (!h.is_identity()) add_at(h, word);
  }

  // Verify Schreier generators, deepest level first; a failing sift inserts
  // the residue and restarts verification from the level it landed on.
  int i = int(levels.size()) - 1;
  while (i >= 0) {
    bool modified = false;
    Level& lv = levels[i];
    for (size_t oi = 0; oi < lv.orbit.size() && !modified; ++oi) {
      uint32_t delta = lv.orbit[oi];
      for (size_t s = 0; s < lv.gens.size() && !modified; ++s) {
        std::vector<int32_t> word;
        Perm u = transversal(lv, delta, &word);
        word.insert(word.end(), lv.words[s].begin(), lv.words[s].end());
        Perm x = u * lv.gens[s];
        std::vector<int32_t> vw;
        Perm v = transversal(lv, x[lv.beta], &vw);
        for (size_t t = vw.size(); t-- > 0;) word.push_back(-vw[t]);
        Perm r = x * v.inverse();
        if (r.is_identity()) continue;
        Perm h = sift(r, size_t(i) + 1, &word);
        if (!h.is_identity()) {
          size_t j = add_at(h, word);
          i = int(j);
          modified = true;
        }
      }
    }
    if (!modified) --i;
  }

  lazy_->order = 1;
  for (const auto& lv : levels) lazy_->order *= lv.orbit.size();
  lazy_->built = true;
}

uint64_t PermGroup::order() const {
  build();
  return lazy_->order;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  build();
  return sift(g, 0, nullptr).is_identity();
}

std::vector<int32_t> PermGroup::factor(const Perm& g) const {
  build();
  std::vector<int32_t> word;
  Perm h = sift(g, 0, &word);
  if (!h.is_identity()) throw Error("factor: element not in group");
  // g * u_0^-1 * ... * u_{k-1}^-1 = e, so g is the inverse of the sift word.
  std::vector<int32_t> out;
  out.reserve(word.size());
  for (size_t t = word.size(); t-- > 0;) out.push_back(-word[t]);
  return out;
}

const std::vector<Perm>& PermGroup::elements(size_t limit) const {
  {
    std::lock_guard<std::mutex> lock(lazy_->mu);
    if (!lazy_->elements.empty()) {
      if (lazy_->elements.size() > limit) throw LimitError("element enumeration limit exceeded");
      return lazy_->elements;
    }
  }
  std::vector<Perm> elems;
  elems.emplace_back(degree_);
  std::unordered_map<Perm, uint32_t, PermHash> index;
  index.emplace(elems[0], 0);
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    for (const auto& s : gens_) {
      Perm y = elems[qi] * s;
      if (index.emplace(y, uint32_t(elems.size())).second) {
        elems.push_back(std::move(y));
        if (elems.size() > limit) throw LimitError("element enumeration limit exceeded");
      }
    }
  }
  std::lock_guard<std::mutex> lock(lazy_->mu);
  if (lazy_->elements.empty()) lazy_->elements = std::move(elems);
  return lazy_->elements;
}

std::vector<Perm> PermGroup::center(size_t limit) const {
  const auto& elems = elements(limit);
  std::vector<Perm> out;
  for (const auto& z : elems) {
    bool central = true;
    for (const auto& g : gens_)
      if (!(z * g == g * z)) {
        central = false;
        break;
      }
    if (central) out.push_back(z);
  }
  return out;
}

PermGroup PermGroup::normal_closure(const std::vector<Perm>& seeds) const {
  std::vector<Perm> clos;
  std::deque<Perm> queue(seeds.begin(), seeds.end());
  PermGroup h(clos, degree_);
  while (!queue.empty()) {
    Perm w = std::move(queue.front());
    queue.pop_front();
    if (w.is_identity() || h.contains(w)) continue;
    clos.push_back(w);
    h = PermGroup(clos, degree_);
    for (const auto& g : gens_) queue.push_back(conj(w, g));
  }
  return h;
}

PermGroup PermGroup::derived_subgroup() const {
  std::vector<Perm> seeds;
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = i + 1; j < gens_.size(); ++j) seeds.push_back(comm(gens_[i], gens_[j]));
  return normal_closure(seeds);
}

bool PermGroup::is_perfect() const { return derived_subgroup().order() == order(); }

PermGroup::MinGenEstimate PermGroup::estimate_min_generators(uint32_t trials, uint64_t seed,
                                                             size_t limit) const {
  const auto& elems = elements(limit);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
  uint64_t target = order();
  uint32_t kmax = uint32_t(gens_.size());
  for (uint32_t k = 1; k <= kmax; ++k) {
    for (uint32_t t = 0; t < trials; ++t) {
      std::vector<Perm> tuple;
      for (uint32_t i = 0; i < k; ++i) tuple.push_back(elems[pick(rng)]);
      PermGroup h(tuple, degree_);
      if (h.order() == target) return MinGenEstimate{k, std::move(tuple)};
    }
  }
  return MinGenEstimate{kmax, gens_};
}

}  // namespace profgrp
