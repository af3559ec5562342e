#include "crvar/standard_tables.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "crvar/free_band.hpp"

namespace crvar::tables {

namespace {

std::vector<Element> identity_vector(std::size_t n) {
  std::vector<Element> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

template <typename F>
UnaryCayleyTable build(std::size_t n, F&& f, std::vector<Element> inv, std::string name) {
  std::vector<Element> op(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      op[a * n + b] = f(a, b);
    }
  }
  return UnaryCayleyTable(n, std::move(op), std::move(inv), std::move(name));
}

}  // namespace

UnaryCayleyTable trivial() { return UnaryCayleyTable(1, {0}, {0}, "T1"); }

UnaryCayleyTable left_zero(std::size_t n) {
  return build(n, [](Element a, Element) { return a; }, identity_vector(n), "LZ" + std::to_string(n));
}

UnaryCayleyTable right_zero(std::size_t n) {
  return build(n, [](Element, Element b) { return b; }, identity_vector(n), "RZ" + std::to_string(n));
}

UnaryCayleyTable chain_semilattice(std::size_t n) {
  return build(n, [](Element a, Element b) { return std::min(a, b); }, identity_vector(n),
               "SL" + std::to_string(n));
}

UnaryCayleyTable cyclic_group(std::size_t n) {
  std::vector<Element> inv(n);
  for (Element a = 0; a < n; ++a) {
    inv[a] = static_cast<Element>((n - a) % n);
  }
  return build(n, [n](Element a, Element b) { return static_cast<Element>((a + b) % n); }, std::move(inv),
               "Z" + std::to_string(n));
}

UnaryCayleyTable symmetric_group3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](std::array<int, 3> const& q) {
    return static_cast<Element>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::size_t n = perms.size();
  std::vector<Element> inv(n);
  for (Element a = 0; a < n; ++a) {
    std::array<int, 3> q{};
    for (int i = 0; i < 3; ++i) {
      q[static_cast<std::size_t>(perms[a][static_cast<std::size_t>(i)])] = i;
    }
    inv[a] = index_of(q);
  }
  return build(
      n,
      [&](Element a, Element b) {
        std::array<int, 3> q{};
        for (std::size_t i = 0; i < 3; ++i) {
          q[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
        }
        return index_of(q);
      },
      std::move(inv), "S3");
}

UnaryCayleyTable rectangular_band(std::size_t m, std::size_t k) {
  return build(
      m * k, [k](Element a, Element b) { return static_cast<Element>((a / k) * k + b % k); },
      identity_vector(m * k), "RB" + std::to_string(m) + "x" + std::to_string(k));
}

UnaryCayleyTable rees_matrix_z2() {
  // element (i, g, l) has index 4i + 2g + l; P[l][j] in Z2
  constexpr int P[2][2] = {{0, 0}, {0, 1}};
  auto idx = [](Element i, Element g, Element l) { return 4 * i + 2 * g + l; };
  // In Z2 the inverse of g in the group H-class (i, l) is p^-1 g^-1 p^-1 = g,
  // so every element is its own inverse.
  std::vector<Element> inv = identity_vector(8);
  return build(
      8,
      [&](Element x, Element y) {
        Element i = x / 4, g = (x / 2) % 2, l = x % 2;
        Element j = y / 4, h = (y / 2) % 2, m = y % 2;
        Element prod = static_cast<Element>((g + static_cast<Element>(P[l][j]) + h) % 2);
        return idx(i, prod, m);
      },
      std::move(inv), "M(Z2;2,2)");
}

UnaryCayleyTable adjoin_zero(UnaryCayleyTable const& s) {
  std::size_t n = s.order() + 1;
  auto z = static_cast<Element>(s.order());
  std::vector<Element> inv(s.inv_data());
  inv.push_back(z);
  auto t = build(
      n, [&](Element a, Element b) { return (a == z || b == z) ? z : s.mul(a, b); }, std::move(inv),
      s.name() + "^0");
  if (!s.labels().empty()) {
    auto l = s.labels();
    l.push_back("0");
    t.set_labels(std::move(l));
  }
  return t;
}

UnaryCayleyTable adjoin_identity(UnaryCayleyTable const& s) {
  std::size_t n = s.order() + 1;
  auto one = static_cast<Element>(s.order());
  std::vector<Element> inv(s.inv_data());
  inv.push_back(one);
  auto t = build(
      n,
      [&](Element a, Element b) {
        if (a == one) {
          return b;
        }
        if (b == one) {
          return a;
        }
        return s.mul(a, b);
      },
      std::move(inv), s.name() + "^1");
  if (!s.labels().empty()) {
    auto l = s.labels();
    l.push_back("1");
    t.set_labels(std::move(l));
  }
  return t;
}

std::vector<UnaryCayleyTable> curated_battery() {
  auto lz2 = left_zero(2), rz2 = right_zero(2), sl2 = chain_semilattice(2);
  auto z2 = cyclic_group(2);
  auto fb2 = free_band(2);
  std::vector<UnaryCayleyTable> b{
      lz2,
      rz2,
      left_zero(3),
      sl2,
      chain_semilattice(3),
      z2,
      cyclic_group(3),
      cyclic_group(4),
      direct_product(z2, z2),
      symmetric_group3(),
      rectangular_band(2, 2),
      rectangular_band(2, 3),
      fb2,
      dual(fb2),
      adjoin_zero(lz2),
      adjoin_zero(rz2),
      adjoin_identity(lz2),
      adjoin_identity(rz2),
      adjoin_zero(z2),
      adjoin_identity(z2),
      direct_product(z2, lz2),
      direct_product(z2, rz2),
      direct_product(cyclic_group(3), sl2),
      direct_product(lz2, sl2),
      right_zero_extension(trivial()),
      rees_matrix_z2(),
      direct_product(z2, rectangular_band(2, 2)),
  };
  b[13].set_name("dual(FB2)");
  b[24].set_name("ext(T1)");
  return b;
}

}  // namespace crvar::tables
