#include "profgrp/coset.hpp"

#include <deque>

#include "profgrp/error.hpp"

namespace profgrp {

namespace {

constexpr int32_t kUndef = -1;

std::vector<uint32_t> word_cols(const Word& w) {
  std::vector<uint32_t> cols;
  cols.reserve(w.size());
  for (int32_t l : w.letters())
    cols.push_back(l > 0 ? 2 * uint32_t(l - 1) : 2 * uint32_t(-l - 1) + 1);
  return cols;
}

struct Enumerator {
  uint32_t nc;  // columns = 2 * ngens
  size_t max_cosets;
  std::vector<int32_t> table;   // ncosets * nc
  std::vector<int32_t> parent;  // union-find, parent[i] <= i
  std::deque<int32_t> dead_queue;
  std::vector<std::pair<int32_t, uint32_t>> deductions;
  size_t live = 0;
  size_t allocated = 0;
  bool out_of_room = false;

  explicit Enumerator(uint32_t ngens, size_t maxc) : nc(2 * ngens), max_cosets(maxc) {
    new_coset();
  }

  int32_t find(int32_t c) {
    int32_t r = c;
    while (parent[r] != r) r = parent[r];
    while (parent[c] != r) {
      int32_t next = parent[c];
      parent[c] = r;
      c = next;
    }
    return r;
  }

  bool alive(int32_t c) { return parent[c] == c; }

  int32_t new_coset() {
    if (parent.size() >= max_cosets) {
      out_of_room = true;
      return kUndef;
    }
    int32_t c = int32_t(parent.size());
    parent.push_back(c);
    table.insert(table.end(), nc, kUndef);
    ++live;
    ++allocated;
    return c;
  }

  int32_t& slot(int32_t c, uint32_t col) { return table[size_t(c) * nc + col]; }

  void set_edge(int32_t a, uint32_t col, int32_t b) {
    slot(a, col) = b;
    slot(b, col ^ 1) = a;
    deductions.emplace_back(a, col);
  }

  void merge(int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);  // keep the smaller index as representative
    parent[a] = b;
    --live;
    dead_queue.push_back(a);
  }

  void process_coincidences() {
    while (!dead_queue.empty()) {
      int32_t d = dead_queue.front();
      dead_queue.pop_front();
      for (uint32_t col = 0; col < nc; ++col) {
        int32_t e = slot(d, col);
        if (e == kUndef) continue;
        slot(d, col) = kUndef;
        if (slot(e, col ^ 1) == d) slot(e, col ^ 1) = kUndef;
        int32_t mu = find(d), nu = find(e);
        int32_t m_out = slot(mu, col);
        if (m_out != kUndef) {
          merge(find(m_out), nu);
        } else {
          int32_t n_in = slot(nu, col ^ 1);
          if (n_in != kUndef)
            merge(find(n_in), mu);
          else
            set_edge(mu, col, nu);
        }
      }
    }
  }

  // Scan relator/subgroup word at coset a; with fill, define cosets to close gaps.
  void scan(int32_t a, const std::vector<uint32_t>& w, bool fill) {
    if (w.empty()) return;
    int32_t f = a, b = a;
    int i = 0, r = int(w.size()) - 1;
    for (;;) {
      while (i <= r && slot(f, w[i]) != kUndef) f = slot(f, w[i++]);
      if (i > r) {
        if (f != b) {
          merge(f, b);
          process_coincidences();
        }
        return;
      }
      while (r >= i && slot(b, w[r] ^ 1) != kUndef) b = slot(b, w[r--] ^ 1);
      if (r < i) {
        if (f != b) {
          merge(f, b);
          process_coincidences();
        }
        return;
      }
      if (r == i) {
        set_edge(f, w[i], b);
        return;
      }
      if (!fill) return;
      int32_t n = new_coset();
      if (n == kUndef) return;  // out of room; caller deals with it
      set_edge(f, w[i], n);
    }
  }

  bool row_complete(int32_t c) {
    for (uint32_t col = 0; col < nc; ++col)
      if (slot(c, col) == kUndef) return false;
    return true;
  }

  // Renumber live cosets in increasing order, dropping dead rows.
  void compact(std::vector<int32_t>* track = nullptr) {
    std::vector<int32_t> remap(parent.size(), kUndef);
    int32_t next = 0;
    for (size_t c = 0; c < parent.size(); ++c)
      if (alive(int32_t(c))) remap[c] = next++;
    std::vector<int32_t> nt(size_t(next) * nc, kUndef);
    for (size_t c = 0; c < parent.size(); ++c) {
      if (remap[c] == kUndef) continue;
      for (uint32_t col = 0; col < nc; ++col) {
        int32_t e = table[c * nc + col];
        if (e != kUndef) nt[size_t(remap[c]) * nc + col] = remap[find(e)];
      }
    }
    table = std::move(nt);
    parent.resize(next);
    for (int32_t i = 0; i < next; ++i) parent[i] = i;
    if (track)
      for (auto& v : *track) v = remap[find(v)];
    deductions.clear();
  }
};

}  // namespace

CosetTable enumerate(const Presentation& p, const std::vector<Word>& subgroup, size_t max_cosets,
                     Strategy strategy) {
  if (max_cosets < 1) throw Error("max_cosets must be at least 1");
  const uint32_t ngens = uint32_t(p.arity());
  std::vector<std::vector<uint32_t>> rels;
  for (const auto& w : p.relators()) rels.push_back(word_cols(w));
  std::vector<std::vector<uint32_t>> subs;
  for (const auto& w : subgroup) {
    for (int32_t l : w.letters())
      if (Word::gen_of(l) >= ngens) throw Error("subgroup word uses generator out of range");
    if (!w.empty()) subs.push_back(word_cols(w));
  }

  Enumerator en(ngens, max_cosets);
  CosetTable out;
  out.ngens = ngens;

  auto finish_closed = [&](int32_t base) {
    // Everything scanned; standardize: renumber cosets in row-major
    // first-appearance order from the subgroup coset.
    std::vector<int32_t> track{base};
    en.compact(&track);
    size_t n = en.parent.size();
    std::vector<int32_t> order(n, kUndef);
    std::vector<int32_t> bfs{track[0]};
    order[track[0]] = 0;
    int32_t next = 1;
    for (size_t qi = 0; qi < bfs.size(); ++qi) {
      int32_t c = bfs[qi];
      for (uint32_t col = 0; col < en.nc; ++col) {
        int32_t e = en.slot(c, col);
        if (e != kUndef && order[e] == kUndef) {
          order[e] = next++;
          bfs.push_back(e);
        }
      }
    }
    out.status = CosetTable::Status::closed;
    out.live_count = n;
    out.max_cosets_used = en.allocated;
    out.table.assign(n * en.nc, kUndef);
    for (size_t c = 0; c < n; ++c)
      for (uint32_t col = 0; col < en.nc; ++col)
        out.table[size_t(order[c]) * en.nc + col] = order[en.slot(int32_t(c), col)];
    return out;
  };

  auto overflowed = [&]() {
    out.status = CosetTable::Status::overflow;
    out.live_count = en.live;
    out.max_cosets_used = en.allocated;
    return out;
  };

  // Subgroup phase: subgroup words close at coset 0, and every relator is
  // scanned there as well before the main loop.
  for (const auto& w : subs) {
    en.scan(en.find(0), w, true);
    if (en.out_of_room) return overflowed();
  }
  for (const auto& w : rels) {
    en.scan(en.find(0), w, true);
    if (en.out_of_room) return overflowed();
  }

  if (strategy == Strategy::hlt) {
    bool retried = false;
    int32_t current = 0;
    for (;;) {
      while (current < int32_t(en.parent.size())) {
        if (!en.alive(current)) {
          ++current;
          continue;
        }
        for (const auto& w : rels) {
          en.scan(current, w, true);
          if (en.out_of_room || !en.alive(current)) break;
        }
        if (!en.out_of_room && en.alive(current)) {
          for (uint32_t col = 0; col < en.nc && !en.out_of_room; ++col)
            if (en.slot(current, col) == kUndef) {
              int32_t n = en.new_coset();
              if (n != kUndef) en.set_edge(current, col, n);
            }
        }
        if (en.out_of_room) break;
        ++current;
      }
      if (!en.out_of_room) break;
      if (retried && en.live + 1 >= max_cosets) return overflowed();
      // Lookahead: deduction-only scan of every live coset, then compact and
      // resume if room was reclaimed.
      for (size_t c = 0; c < en.parent.size(); ++c) {
        if (!en.alive(int32_t(c))) continue;
        for (const auto& w : rels) {
          en.scan(int32_t(c), w, false);
          if (!en.alive(int32_t(c))) break;
        }
      }
      size_t before = en.parent.size();
      std::vector<int32_t> track{en.find(current < int32_t(before) ? current : 0)};
      en.compact(&track);
      if (en.parent.size() >= max_cosets) return overflowed();
      en.out_of_room = false;
      current = 0;  // rescan from the top after renumbering
      retried = true;
    }
    // Closed: every live row is complete and all relators scanned.
    return finish_closed(en.find(0));
  }

  // Felsch: exhaust deductions after every definition.
  std::vector<std::vector<std::vector<uint32_t>>> bucket(en.nc);
  for (const auto& w : rels) {
    for (auto base : {w, [&] {  // relator and its inverse
           std::vector<uint32_t> inv(w.rbegin(), w.rend());
           for (auto& c : inv) c ^= 1;
           return inv;
         }()}) {
      for (size_t k = 0; k < base.size(); ++k) {
        std::vector<uint32_t> rot(base.begin() + k, base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + k);
        bucket[rot[0]].push_back(rot);
      }
    }
  }
  auto drain = [&]() {
    while (!en.deductions.empty()) {
      auto [c, col] = en.deductions.back();
      en.deductions.pop_back();
      int32_t a = en.find(c);
      int32_t b0 = en.slot(a, col);
      if (b0 == kUndef) continue;
      for (const auto& w : bucket[col]) en.scan(a, w, false);
      int32_t b = en.find(b0);
      for (const auto& w : bucket[col ^ 1]) en.scan(b, w, false);
    }
  };
  drain();
  int32_t hint = 0;
  for (;;) {
    int32_t c = hint;
    uint32_t col = 0;
    bool found = false;
    while (c < int32_t(en.parent.size())) {
      if (en.alive(c)) {
        for (col = 0; col < en.nc; ++col)
          if (en.slot(c, col) == kUndef) {
            found = true;
            break;
          }
        if (found) break;
      }
      hint = ++c;
    }
    if (!found) break;
    int32_t n = en.new_coset();
    if (n == kUndef) return overflowed();
    en.set_edge(c, col, n);
    drain();
  }
  return finish_closed(en.find(0));
}

std::vector<Perm> to_permutations(const CosetTable& t) {
  if (!t.closed()) throw Error("coset table is not closed");
  std::vector<Perm> out;
  for (uint32_t g = 0; g < t.ngens; ++g) {
    std::vector<uint32_t> img(t.live_count);
    for (size_t c = 0; c < t.live_count; ++c) img[c] = uint32_t(t.at(c, 2 * g));
    out.emplace_back(std::move(img));
  }
  return out;
}

}  // namespace profgrp
