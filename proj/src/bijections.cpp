#include "ncpart/bijections.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace ncpart {

namespace {

bool signed_ground(Family f) { return f != Family::A; }

// Order on block entries: by absolute value, unbarred first.
bool letter_less(int x, int y) {
  int ax = std::abs(x), ay = std::abs(y);
  return ax != ay ? ax < ay : x > y;
}

void canonicalise(std::vector<std::vector<int>>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end(), letter_less);
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return letter_less(a.front(), b.front()); });
}

std::vector<int> ground_set(Family f, int N) {
  std::vector<int> g;
  for (int x = 1; x <= N; ++x) g.push_back(x);
  if (signed_ground(f))
    for (int x = 1; x <= N; ++x) g.push_back(-x);
  return g;
}

// Index of a point in 0..2N-1 (or 0..N-1 for A).
size_t slot(int x, int N) { return x > 0 ? static_cast<size_t>(x - 1) : static_cast<size_t>(N - x - 1); }

// Position on the boundary circle for A and B.
int circle_pos(Family f, int x, int N) { return f == Family::A ? x - 1 : static_cast<int>(slot(x, N)); }

bool disc_non_crossing(const SetPartition& p, int N) {
  std::vector<std::pair<int, int>> arcs;
  for (const auto& b : p.blocks) {
    std::vector<int> pos;
    for (int x : b) pos.push_back(circle_pos(p.family, x, N));
    std::sort(pos.begin(), pos.end());
    for (size_t j = 0; j + 1 < pos.size(); ++j) arcs.emplace_back(pos[j], pos[j + 1]);
  }
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = 0; j < arcs.size(); ++j) {
      auto [a, b] = arcs[i];
      auto [c, d] = arcs[j];
      if (a < c && c < b && b < d) return false;
    }
  return true;
}

int count_cycles_on_points(const SignedPerm& p, Family f) {
  int N = p.n();
  auto g = ground_set(f, N);
  std::vector<char> seen(2 * static_cast<size_t>(N), 0);
  int cyc = 0;
  for (int x : g) {
    if (seen[slot(x, N)]) continue;
    ++cyc;
    for (int y = x; !seen[slot(y, N)]; y = p(y)) seen[slot(y, N)] = 1;
  }
  return cyc;
}

int find(std::vector<int>& parent, int x) {
  while (parent[static_cast<size_t>(x)] != x) {
    parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    x = parent[static_cast<size_t>(x)];
  }
  return x;
}

// Genus-zero test for p drawn against the boundary permutation g on the
// signed ground set: #g + #p + #(p^-1 g) = points + 2 * #orbits<p, g>.
bool genus_zero(const SignedPerm& p, const SignedPerm& g) {
  int N = p.n();
  std::vector<int> parent(2 * static_cast<size_t>(N));
  std::iota(parent.begin(), parent.end(), 0);
  for (int x : ground_set(Family::B, N)) {
    for (const SignedPerm* q : {&p, &g}) {
      int a = find(parent, static_cast<int>(slot(x, N))), b = find(parent, static_cast<int>(slot((*q)(x), N)));
      parent[static_cast<size_t>(a)] = b;
    }
  }
  int orbits = 0;
  for (int i = 0; i < 2 * N; ++i)
    if (find(parent, i) == i) ++orbits;
  int lhs = count_cycles_on_points(g, Family::B) + count_cycles_on_points(p, Family::B) +
            count_cycles_on_points(p.inverse() * g, Family::B);
  return lhs == 2 * N + 2 * orbits;
}

bool residues_successive(const SignedPerm& p, int m) {
  for (int x = 1; x <= p.n(); ++x) {
    int y = std::abs(p(x));
    if (y == x && p(x) > 0) continue;
    if ((y - 1) % m != x % m) return false;
  }
  return true;
}

// With successive residues, g^-1 p preserves every residue class mod m; in
// type D each of its m restrictions must change an even number of signs.
bool class_parity_ok(const SignedPerm& p, const SignedPerm& g, int m) {
  SignedPerm x = g.inverse() * p;
  std::vector<int> neg(static_cast<size_t>(m), 0);
  for (int k = 1; k <= x.n(); ++k)
    if (x(k) < 0) neg[static_cast<size_t>((k - 1) % m)]++;
  return std::all_of(neg.begin(), neg.end(), [](int v) { return v % 2 == 0; });
}

// D: the zero block may only occur when it holds every inner point and at
// least two outer ones.
bool zero_block_ok_D(const SetPartition& p) {
  int z = p.zero_block();
  if (z < 0) return true;
  int M = p.m * (p.n - 1), N = p.m * p.n;
  const auto& blk = p.blocks[static_cast<size_t>(z)];
  int inner = 0, outer = 0;
  for (int x : blk) (std::abs(x) > M ? inner : outer)++;
  return inner == 2 * (N - M) && outer >= 2;
}

SignedPerm perm_from_cycles(int N, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<size_t>(N));
  for (int i = 1; i <= N; ++i) img[static_cast<size_t>(i - 1)] = i;
  for (const auto& c : cycles)
    for (size_t j = 0; j < c.size(); ++j) {
      int x = c[j], y = c[(j + 1) % c.size()];
      if (x > 0) img[static_cast<size_t>(x - 1)] = y;
      else img[static_cast<size_t>(-x - 1)] = -y;
    }
  return SignedPerm::from_images(std::move(img));
}

// Annulus test: search the admissible cyclic orders of the blocks for a
// drawing of genus zero with successive residues along every cycle.
bool annulus_valid(const SetPartition& p) {
  int m = p.m, N = m * p.n, M = m * (p.n - 1);
  if (!zero_block_ok_D(p)) return false;
  auto outer_pos = [&](int x) { return x > 0 ? x - 1 : M - x - 1; };
  auto inner_pos = [&](int x) { return x > 0 ? x - M - 1 : (N - M) - x - M - 1; };
  std::vector<std::vector<int>> fixed;  // cycles with a forced order
  std::vector<std::pair<std::vector<int>, std::vector<int>>> mixed;
  std::set<std::vector<int>> done;
  for (const auto& blk : p.blocks) {
    if (blk.size() % static_cast<size_t>(m) != 0) return false;
    std::vector<int> O, I;
    for (int x : blk) (std::abs(x) > M ? I : O).push_back(x);
    std::sort(O.begin(), O.end(), [&](int a, int b) { return outer_pos(a) < outer_pos(b); });
    std::sort(I.begin(), I.end(), [&](int a, int b) { return inner_pos(a) < inner_pos(b); });
    bool zero = std::find(blk.begin(), blk.end(), -blk.front()) != blk.end();
    if (zero) {
      fixed.push_back(O);
      fixed.push_back(I);
      continue;
    }
    // Only one block of each symmetric pair is chosen freely.
    std::vector<int> neg;
    for (int x : blk) neg.push_back(-x);
    std::sort(neg.begin(), neg.end(), letter_less);
    if (done.count(neg)) continue;
    done.insert(blk);
    if (O.empty() || I.empty()) {
      auto c = O.empty() ? I : O;
      fixed.push_back(c);
      for (int& x : c) x = -x;
      fixed.push_back(c);
    } else {
      mixed.emplace_back(O, I);
    }
  }
  SignedPerm g = nabla_base(Family::D, p.n, m);
  std::vector<std::vector<int>> cycles = fixed;
  std::function<bool(size_t)> search = [&](size_t k) -> bool {
    if (k == mixed.size()) {
      SignedPerm q = perm_from_cycles(N, cycles);
      return residues_successive(q, m) && class_parity_ok(q, g, m) && genus_zero(q, g);
    }
    const auto& [O, I] = mixed[k];
    for (size_t gap = 1; gap <= O.size(); ++gap)
      for (size_t r = 0; r < I.size(); ++r) {
        std::vector<int> c(O.begin(), O.begin() + static_cast<long>(gap));
        for (size_t t = 0; t < I.size(); ++t) c.push_back(I[(r + t) % I.size()]);
        c.insert(c.end(), O.begin() + static_cast<long>(gap), O.end());
        std::vector<int> cn = c;
        for (int& x : cn) x = -x;
        cycles.push_back(c);
        cycles.push_back(cn);
        bool ok = search(k + 1);
        cycles.pop_back();
        cycles.pop_back();
        if (ok) return true;
      }
    return false;
  };
  return search(0);
}

}  // namespace

int SetPartition::zero_block() const {
  for (size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    if (!b.empty() && std::find(b.begin(), b.end(), -b.front()) != b.end()) return static_cast<int>(i);
  }
  return -1;
}

std::string SetPartition::str() const {
  std::string out = "{";
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ",";
    out += "{";
    for (size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(blocks[i][j]);
    }
    out += "}";
  }
  return out + "}";
}

nlohmann::json SetPartition::to_json() const {
  return {{"family", std::string(1, family_char(family))}, {"n", n}, {"m", m}, {"blocks", blocks}};
}

SignedPerm interleave(const SignedPerm& w, int m, int i) {
  int n = w.n();
  std::vector<int> img(static_cast<size_t>(m * n));
  for (int x = 1; x <= m * n; ++x) img[static_cast<size_t>(x - 1)] = x;
  for (int k = 1; k <= n; ++k) {
    int v = w(k);
    int image = m * std::abs(v) + i - m;
    img[static_cast<size_t>(m * k + i - m - 1)] = v > 0 ? image : -image;
  }
  return SignedPerm::from_images(std::move(img));
}

SignedPerm nabla_base(Family f, int n, int m) {
  int N = m * n;
  std::vector<int> outer, inner;
  int M = f == Family::D ? m * (n - 1) : N;
  for (int x = 1; x <= M; ++x) outer.push_back(x);
  for (int x = M + 1; x <= N; ++x) inner.push_back(x);
  if (f == Family::A) return perm_from_cycles(N, {outer});
  std::vector<std::vector<int>> cyc;
  for (const auto* part : {&outer, &inner}) {
    if (part->empty()) continue;
    std::vector<int> c = *part;
    for (int x : *part) c.push_back(-x);
    cyc.push_back(c);
  }
  return perm_from_cycles(N, cyc);
}

SignedPerm nabla_perm(Family f, int n, int m, const std::vector<SignedPerm>& tuple) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "m must be positive");
  if (tuple.size() != static_cast<size_t>(m) + 1)
    fail(ErrorCode::InvalidArgument, "expected a tuple of m + 1 group elements");
  for (const auto& w : tuple)
    if (w.n() != n) fail(ErrorCode::RankMismatch, "tuple entries must act on n letters");
  SignedPerm out = nabla_base(f, n, m);
  for (int i = 1; i <= m; ++i) out = out * interleave(tuple[static_cast<size_t>(i)], m, i).inverse();
  return out;
}

SetPartition partition_of(const SignedPerm& p, Family f, int n, int m) {
  int N = p.n();
  if (N != m * n) fail(ErrorCode::RankMismatch, "permutation does not act on m*n letters");
  std::vector<char> seen(2 * static_cast<size_t>(N), 0);
  SetPartition out{f, n, m, {}};
  std::vector<int> zero;
  for (int x : ground_set(f, N)) {
    if (seen[slot(x, N)]) continue;
    std::vector<int> blk;
    for (int y = x; !seen[slot(y, N)]; y = p(y)) {
      seen[slot(y, N)] = 1;
      blk.push_back(y);
    }
    bool closed = f != Family::A && std::find(blk.begin(), blk.end(), -x) != blk.end();
    if (closed && f == Family::D) zero.insert(zero.end(), blk.begin(), blk.end());
    else out.blocks.push_back(std::move(blk));
  }
  if (!zero.empty()) out.blocks.push_back(std::move(zero));
  canonicalise(out.blocks);
  return out;
}

SetPartition nabla(Family f, int n, int m, const std::vector<SignedPerm>& tuple) {
  return partition_of(nabla_perm(f, n, m, tuple), f, n, m);
}

BlockHistogram block_histogram(const SetPartition& p) {
  BlockHistogram h;
  h.b.assign(static_cast<size_t>(p.n), 0);
  int z = p.zero_block();
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    int size = static_cast<int>(p.blocks[i].size());
    if (size % p.m != 0)
      fail(ErrorCode::BadBlockSize, "block of size " + std::to_string(size) + " is not divisible by m = " + std::to_string(p.m));
    if (static_cast<int>(i) == z) {
      h.zero_size = size;
      continue;
    }
    int k = size / p.m;
    if (k < 1 || k > p.n) fail(ErrorCode::BadBlockSize, "block size out of range");
    h.b[static_cast<size_t>(k - 1)]++;
  }
  if (p.family != Family::A) {
    for (int& v : h.b) {
      if (v % 2) fail(ErrorCode::BadBlockSize, "non-zero blocks do not pair up");
      v /= 2;
    }
  }
  return h;
}

bool is_valid_partition(const SetPartition& p) {
  int N = p.m * p.n;
  // Ground-set coverage and symmetry.
  std::vector<char> seen(2 * static_cast<size_t>(N), 0);
  std::set<std::vector<int>> blocks(p.blocks.begin(), p.blocks.end());
  size_t covered = 0;
  for (const auto& b : p.blocks) {
    if (b.empty() || b.size() % static_cast<size_t>(p.m) != 0) return false;
    for (int x : b) {
      if (x == 0 || std::abs(x) > N || (p.family == Family::A && x < 0) || seen[slot(x, N)]) return false;
      seen[slot(x, N)] = 1;
      ++covered;
    }
    if (p.family != Family::A) {
      std::vector<int> neg;
      for (int x : b) neg.push_back(-x);
      std::sort(neg.begin(), neg.end(), letter_less);
      if (!blocks.count(neg)) return false;
    }
  }
  if (covered != (p.family == Family::A ? 1u : 2u) * static_cast<size_t>(N)) return false;
  if (p.family == Family::D) return annulus_valid(p);
  return disc_non_crossing(p, N);
}

bool refines(const SetPartition& a, const SetPartition& b) {
  int N = a.m * a.n;
  std::vector<int> owner(2 * static_cast<size_t>(N), -1);
  for (size_t i = 0; i < b.blocks.size(); ++i)
    for (int x : b.blocks[i]) owner[slot(x, N)] = static_cast<int>(i);
  for (const auto& blk : a.blocks)
    for (int x : blk)
      if (owner[slot(x, N)] != owner[slot(blk.front(), N)]) return false;
  return true;
}

std::vector<SetPartition> enumerate_valid_partitions(Family f, int n, int m) {
  int N = m * n;
  if (N > 10) fail(ErrorCode::TooLarge, "ground set too large for exhaustive partition search");
  std::vector<SetPartition> out;
  std::vector<std::vector<int>> blocks;
  // Place 1..N in turn; for signed ground sets -x follows x into the mirror block.
  std::function<void(int)> rec = [&](int x) {
    if (x > N) {
      SetPartition p{f, n, m, blocks};
      if (f != Family::A) {
        std::vector<std::vector<int>> all;
        for (const auto& b : blocks) {
          all.push_back(b);
          if (std::find(b.begin(), b.end(), -b.front()) == b.end()) {
            std::vector<int> neg;
            for (int y : b) neg.push_back(-y);
            all.push_back(neg);
          }
        }
        p.blocks = std::move(all);
      }
      canonicalise(p.blocks);
      if (is_valid_partition(p)) out.push_back(std::move(p));
      return;
    }
    for (size_t i = 0; i < blocks.size(); ++i) {
      // rec() may grow the outer vector, so blocks[i] is re-read each time
      bool zero = f != Family::A && std::find(blocks[i].begin(), blocks[i].end(), -blocks[i].front()) != blocks[i].end();
      if (zero) {
        blocks[i].push_back(x);
        blocks[i].push_back(-x);
        rec(x + 1);
        blocks[i].resize(blocks[i].size() - 2);
        continue;
      }
      for (int sgn : {1, -1}) {
        if (sgn < 0 && f == Family::A) break;
        blocks[i].push_back(sgn * x);
        rec(x + 1);
        blocks[i].pop_back();
      }
    }
    blocks.push_back({x});
    rec(x + 1);
    blocks.back() = {x, -x};
    if (f != Family::A) {
      bool have_zero = false;
      for (size_t i = 0; i + 1 < blocks.size(); ++i)
        if (std::find(blocks[i].begin(), blocks[i].end(), -blocks[i].front()) != blocks[i].end()) have_zero = true;
      if (!have_zero) rec(x + 1);
    }
    blocks.pop_back();
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

BlockHistogram element_histogram(const NcmPoset& p, int elem) {
  std::vector<SignedPerm> t;
  for (int i = 0; i <= p.m; ++i) t.push_back(p.component(elem, i));
  return block_histogram(nabla(p.family, p.n, p.m, t));
}

nlohmann::json IsoReport::to_json() const {
  return {{"family", std::string(1, family_char(family))},
          {"n", n},
          {"m", m},
          {"poset_size", poset_size},
          {"image_size", image_size},
          {"valid_partitions", valid_count},
          {"valid_images", valid_images},
          {"injective", injective},
          {"order_isomorphism", order_iso},
          {"block_correspondence", blocks_match},
          {"onto_valid_partitions", onto_valid},
          {"ok", ok()},
          {"failure", failure}};
}

IsoReport verify_isomorphism(Family f, int n, int m, const Config& cfg) {
  IsoReport rep;
  rep.family = f;
  rep.n = n;
  rep.m = m;
  NcmPoset poset = build_ncm_poset(f, n, m, cfg);
  size_t sz = poset.tuples.size();
  rep.poset_size = sz;
  std::vector<SetPartition> image(sz);
  std::map<SetPartition, int> seen;
  SignedPerm base = nabla_base(f, n, m);
  auto note = [&](bool& flag, const std::string& msg) {
    flag = false;
    if (rep.failure.empty()) rep.failure = msg;
  };
  for (size_t e = 0; e < sz; ++e) {
    std::vector<SignedPerm> t;
    for (int i = 0; i <= m; ++i) t.push_back(poset.component(static_cast<int>(e), i));
    SignedPerm pi = nabla_perm(f, n, m, t);
    image[e] = partition_of(pi, f, n, m);
    const SetPartition& P = image[e];
    bool valid = is_valid_partition(P);
    if (valid && f == Family::D) valid = residues_successive(pi, m) && class_parity_ok(pi, base, m) && genus_zero(pi, base);
    if (!valid) note(rep.valid_images, "image " + P.str() + " is not a valid partition");
    if (!seen.emplace(P, static_cast<int>(e)).second) note(rep.injective, "two elements map to " + P.str());

    // Block correspondence with the cycle structure of w_0.
    CycleDecomposition cd = cycles(t[0]);
    BlockHistogram expect;
    expect.b.assign(static_cast<size_t>(n), 0);
    if (cd.fixed_points) expect.b[0] += cd.fixed_points;
    for (const auto& c : cd.a_cycles) expect.b[c.size() - 1]++;
    int bl = 0;
    for (const auto& c : cd.b_cycles) bl += static_cast<int>(c.size());
    expect.zero_size = 2 * m * bl;
    BlockHistogram got;
    try {
      got = block_histogram(P);
    } catch (const Error& err) {
      note(rep.blocks_match, P.str() + ": " + err.what());
      continue;
    }
    if (!(got == expect)) note(rep.blocks_match, "block sizes of " + P.str() + " disagree with the cycles of w_0");
  }
  rep.image_size = seen.size();
  for (size_t i = 0; i < sz && rep.order_iso; ++i)
    for (size_t j = 0; j < sz; ++j) {
      bool le = poset.order.le(static_cast<int>(i), static_cast<int>(j));
      if (le != refines(image[i], image[j])) {
        note(rep.order_iso, "order disagrees for " + image[i].str() + " and " + image[j].str());
        break;
      }
    }
  auto valid = enumerate_valid_partitions(f, n, m);
  rep.valid_count = valid.size();
  if (valid.size() != seen.size()) {
    note(rep.onto_valid, std::to_string(valid.size()) + " valid partitions but " + std::to_string(seen.size()) + " images");
  } else {
    for (const auto& p : valid)
      if (!seen.count(p)) {
        note(rep.onto_valid, "valid partition " + p.str() + " is not an image");
        break;
      }
  }
  return rep;
}

}  // namespace ncpart
