#include "gsp4/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "gsp4/checked.hpp"
#include "padic_detail.hpp"

namespace gsp4 {

using detail::checked_pow;

namespace {

using I128 = __int128;

// Integral lattice H Z_p^4 (a4 = 0 normalization) in position mu around Z_p^4.
class StandardSearch {
 public:
  StandardSearch(int p, const DominantCoweight& mu) : p_(p), mu_(mu) {
    c_ = mu[0] + mu[3];
    need2_ = mu[2] + mu[3];
    need3_ = mu[1] + mu[2] + mu[3];
    modc_ = checked_pow(p, c_);
    for (int e = 0; e <= 2 * mu[0] + 2; ++e) pow_.push_back(checked_pow(p, e));
  }

  std::vector<IntMatrix> run() {
    const int top = mu_[0];
    for (int k1 = 0; k1 <= top; ++k1)
      for (int k2 = 0; k2 <= top; ++k2) {
        int k4 = c_ - k1, k3 = c_ - k2;
        if (k3 < 0 || k4 < 0 || k3 > top || k4 > top) continue;
        Weight w(k1, k2, k3, k4);
        if (!dominance_leq(dominant_conjugate(w), mu_)) continue;
        k_ = {k1, k2, k3, k4};
        h_ = IntMatrix{};
        for (int i = 0; i < 4; ++i) h_[i][i] = pow_[k_[i]];
        required_ = entry_requirements();
        fill(0, 1);
      }
    return std::move(found_);
  }

 private:
  // Lower bounds on v_p(x_ij) forced by the 2x2 and 3x3 minors of the
  // elementary divisors: rows (i,r), cols (j,r) give x_ij p^{k_r}.
  std::array<std::array<int, 4>, 4> entry_requirements() const {
    std::array<std::array<int, 4>, 4> req{};
    for (int j = 1; j < 4; ++j)
      for (int i = 0; i < j; ++i) {
        int r2 = 0, r3 = 0;
        for (int r = j + 1; r < 4; ++r) {
          r2 = std::max(r2, need2_ - k_[r]);
          for (int s = r + 1; s < 4; ++s) r3 = std::max(r3, need3_ - k_[r] - k_[s]);
        }
        req[i][j] = std::min(std::max(r2, r3), k_[i]);
      }
    return req;
  }

  I128 pairing(int a, int b) const {
    return static_cast<I128>(h_[0][a]) * h_[3][b] + static_cast<I128>(h_[1][a]) * h_[2][b] -
           static_cast<I128>(h_[2][a]) * h_[1][b] - static_cast<I128>(h_[3][a]) * h_[0][b];
  }

  // Entries above the diagonal are filled column by column; within a column
  // from the bottom up so that each symplectic pairing is checked as soon as
  // the entries it depends on are fixed.
  void fill(int row, int col) {
    if (col == 4) {
      accept();
      return;
    }
    int i = col - 1 - row;  // fill rows col-1, col-2, ..., 0
    if (i < 0) {
      for (int a = 0; a < col; ++a)
        if (pairing(a, col) % modc_ != 0) return;
      fill(0, col + 1);
      return;
    }
    const std::int64_t step = pow_[required_[i][col]];
    const std::int64_t limit = pow_[k_[i]];
    for (std::int64_t x = 0; x < limit; x += step) {
      h_[i][col] = x;
      if (!partial_ok(i, col)) continue;
      fill(row + 1, col);
    }
    h_[i][col] = 0;
  }

  // Pairings of column col with earlier columns a that only involve rows
  // already fixed (rows >= i of column col).
  bool partial_ok(int i, int col) const {
    for (int a = 0; a < col; ++a) {
      // J(b_a, b_col) uses rows {3 - r : r with h[r][a] != 0}; b_a lives in rows <= a.
      // Row 3 - r of column col is fixed when 3 - r >= i, i.e. r <= 3 - i.
      if (a > 3 - i) continue;
      if (pairing(a, col) % modc_ != 0) return false;
    }
    return true;
  }

  void accept() {
    std::array<std::array<std::int64_t, 4>, 4> a = h_;
    int e = 2 * c_ + 1;  // above v_p(det H)
    auto v = detail::smith_valuations<std::int64_t>(a, p_, e, pow_[e]);
    std::sort(v.begin(), v.end(), std::greater<>());
    for (int n = 0; n < 4; ++n)
      if (v[n] != mu_[n]) return;
    found_.push_back(h_);
  }

  int p_;
  DominantCoweight mu_;
  int c_, need2_, need3_;
  std::int64_t modc_;
  std::vector<std::int64_t> pow_;
  std::array<int, 4> k_{};
  IntMatrix h_{};
  std::array<std::array<int, 4>, 4> required_{};
  std::vector<IntMatrix> found_;
};

struct SearchKey {
  int p;
  DominantCoweight mu;
  auto operator<=>(const SearchKey&) const = default;
};

std::mutex memo_mutex;
std::map<SearchKey, std::shared_ptr<const std::vector<PadicLattice>>> memo;

std::shared_ptr<const std::vector<PadicLattice>> around_standard(int p, const DominantCoweight& mu) {
  SearchKey key{p, mu};
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  int m = mu[3];
  DominantCoweight shifted(mu.weight() - coweights::central(m).weight());
  auto hs = StandardSearch(p, shifted).run();
  auto out = std::make_shared<std::vector<PadicLattice>>();
  out->reserve(hs.size());
  for (const auto& h : hs) out->push_back(make_lattice(p, -m, h));
  std::lock_guard lock(memo_mutex);
  return memo.emplace(key, out).first->second;
}

void check_window(const DominantCoweight& mu, int window) {
  if (mu.spread() > window)
    throw WindowError("coweight " + mu.to_string() + " has spread " + std::to_string(mu.spread()) +
                      " beyond the enumeration window " + std::to_string(window));
}

}  // namespace

std::vector<PadicLattice> enumerate_at_position(const PadicLattice& lattice, const DominantCoweight& mu, int window) {
  check_window(mu, window);
  const int p = lattice.prime();
  auto base = around_standard(p, mu);
  if (lattice == PadicLattice::standard(p)) return *base;
  RatMatrix g = symplectic_frame(lattice);
  std::vector<PadicLattice> out;
  out.reserve(base->size());
  std::set<PadicLattice> seen;
  for (const auto& l : *base) {
    out.push_back(transform(g, l));
    if (!seen.insert(out.back()).second) throw std::logic_error("duplicate lattice after change of frame");
  }
  return out;
}

std::size_t coset_count(int p, const DominantCoweight& mu, int window) {
  check_window(mu, window);
  return around_standard(p, mu)->size();
}

std::vector<PadicLattice> enumerate_between(const PadicLattice& outer, const PadicLattice& inner,
                                            std::optional<int> colength) {
  if (!outer.contains(inner)) throw std::invalid_argument("inner lattice is not contained in outer lattice");
  const int p = outer.prime();
  RatMatrix ob = outer.basis();
  RatMatrix n = multiply(inverse(ob), inner.basis());
  auto divisors = elementary_divisors(n, p);
  const int e = divisors[0];
  const std::int64_t mod = checked_pow(p, e);
  std::array<std::array<std::int64_t, 4>, 4> res{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Rational& x = n[i][j];
      BigInt m = BigInt(mod);
      res[i][j] = static_cast<std::int64_t>(
          mod_floor(numerator(x) * detail::inverse_mod<BigInt>(denominator(x), m), m));
    }
  std::vector<std::int64_t> pw;
  for (int k = 0; k <= e; ++k) pw.push_back(checked_pow(p, k));

  std::vector<PadicLattice> out;
  IntMatrix h{};
  // Exact membership in H Z_p^4 for an integer vector (entries are small).
  auto member = [&](std::array<std::int64_t, 4> w) {
    for (int i = 3; i >= 0; --i) {
      if (w[i] % h[i][i] != 0) return false;
      std::int64_t coef = w[i] / h[i][i];
      for (int r = 0; r <= i; ++r) w[r] -= coef * h[r][i];
    }
    return true;
  };
  // Once p^e Z^4 lies in M, the residues of inner modulo p^e decide the rest.
  auto contains_inner = [&]() {
    for (int j = 0; j < 4; ++j) {
      std::array<std::int64_t, 4> w{};
      w[j] = mod;
      if (!member(w)) return false;
    }
    for (int j = 0; j < 4; ++j)
      if (!member({res[0][j], res[1][j], res[2][j], res[3][j]})) return false;
    return true;
  };
  std::array<int, 4> k{};
  std::vector<std::pair<int, int>> slots;
  std::function<void(std::size_t)> fill = [&](std::size_t n_slot) {
    if (n_slot == slots.size()) {
      if (!contains_inner()) return;
      RatMatrix hb{};
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) hb[i][j] = h[i][j];
      out.push_back(canonicalize(multiply(ob, hb), p));
      return;
    }
    auto [i, j] = slots[n_slot];
    for (std::int64_t x = 0; x < pw[k[i]]; ++x) {
      h[i][j] = x;
      fill(n_slot + 1);
    }
    h[i][j] = 0;
  };
  for (int code = 0; code < detail::checked_pow(e + 1, 4); ++code) {
    int rest = code, total = 0;
    for (int i = 0; i < 4; ++i) {
      k[i] = rest % (e + 1);
      rest /= e + 1;
      total += k[i];
    }
    if (colength && total != *colength) continue;
    h = IntMatrix{};
    slots.clear();
    for (int i = 0; i < 4; ++i) {
      h[i][i] = pw[k[i]];
      for (int j = i + 1; j < 4; ++j)
        if (k[i] > 0) slots.emplace_back(i, j);
    }
    fill(0);
  }
  return out;
}

}  // namespace gsp4
