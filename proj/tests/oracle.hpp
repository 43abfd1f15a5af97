#pragma once

// Brute-force reference computations straight from the definitions. Shares
// no code with the library: rings are plain arithmetic callbacks over
// 0..size-1 and every set is a sorted std::set.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "deltaring/element_set.hpp"
#include "deltaring/finite_ring.hpp"

namespace oracle {

using Set = std::set<int>;

struct Ring {
  int size = 0;
  std::function<int(int, int)> add;
  std::function<int(int, int)> mul;
  int zero = 0;
  int one = 1;

  int neg(int x) const {
    for (int y = 0; y < size; ++y) {
      if (add(x, y) == zero) {
        return y;
      }
    }
    return -1;
  }
  int sub(int x, int y) const { return add(x, neg(y)); }
};

inline Ring zn(int n) {
  return {n, [n](int x, int y) { return (x + y) % n; },
          [n](int x, int y) { return (x * y) % n; }, 0, 1 % n};
}

// k x k matrices over Z_n, row-major entries, first entry most significant.
// upper keeps only entries with i <= j.
inline Ring matrices(int k, int n, bool upper) {
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (!upper || i <= j) {
        pos.emplace_back(i, j);
      }
    }
  }
  int size = 1;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    size *= n;
  }
  auto decode = [=](int x) {
    std::vector<int> m(static_cast<std::size_t>(k * k), 0);
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
      m[static_cast<std::size_t>(it->first * k + it->second)] = x % n;
      x /= n;
    }
    return m;
  };
  auto encode = [=](std::vector<int> const& m) {
    int x = 0;
    for (auto [i, j] : pos) {
      x = x * n + m[static_cast<std::size_t>(i * k + j)];
    }
    return x;
  };
  std::vector<int> id(static_cast<std::size_t>(k * k), 0);
  for (int i = 0; i < k; ++i) {
    id[static_cast<std::size_t>(i * k + i)] = 1 % n;
  }
  Ring r;
  r.size = size;
  r.add = [=](int x, int y) {
    auto a = decode(x);
    auto b = decode(y);
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = (a[i] + b[i]) % n;
    }
    return encode(a);
  };
  r.mul = [=](int x, int y) {
    auto a = decode(x);
    auto b = decode(y);
    std::vector<int> c(a.size(), 0);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        int s = 0;
        for (int l = 0; l < k; ++l) {
          s += a[static_cast<std::size_t>(i * k + l)]
               * b[static_cast<std::size_t>(l * k + j)];
        }
        c[static_cast<std::size_t>(i * k + j)] = s % n;
      }
    }
    return encode(c);
  };
  r.zero = 0;
  r.one = encode(id);
  return r;
}

inline Ring product(Ring const& r, Ring const& s) {
  int const m = s.size;
  return {r.size * m,
          [=](int x, int y) {
            return r.add(x / m, y / m) * m + s.add(x % m, y % m);
          },
          [=](int x, int y) {
            return r.mul(x / m, y / m) * m + s.mul(x % m, y % m);
          },
          r.zero * m + s.zero, r.one * m + s.one};
}

// View over a library ring's tables, for the set computations below.
inline Ring from(deltaring::FiniteRing const& f) {
  auto add = f.add_table();
  auto mul = f.mul_table();
  int const n = static_cast<int>(f.size());
  return {n,
          [add, n](int x, int y) {
            return static_cast<int>(add[static_cast<std::size_t>(x * n + y)]);
          },
          [mul, n](int x, int y) {
            return static_cast<int>(mul[static_cast<std::size_t>(x * n + y)]);
          },
          static_cast<int>(f.zero().index), static_cast<int>(f.one().index)};
}

inline bool is_unit(Ring const& r, int x) {
  for (int y = 0; y < r.size; ++y) {
    if (r.mul(x, y) == r.one && r.mul(y, x) == r.one) {
      return true;
    }
  }
  return false;
}

template <class Pred>
Set select(Ring const& r, Pred pred) {
  Set out;
  for (int x = 0; x < r.size; ++x) {
    if (pred(x)) {
      out.insert(x);
    }
  }
  return out;
}

inline Set units(Ring const& r) {
  return select(r, [&](int x) { return is_unit(r, x); });
}

inline Set idempotents(Ring const& r) {
  return select(r, [&](int x) { return r.mul(x, x) == x; });
}

inline Set nilpotents(Ring const& r) {
  return select(r, [&](int x) {
    int p = x;
    for (int k = 0; k <= r.size; ++k) {
      if (p == r.zero) {
        return true;
      }
      p = r.mul(p, x);
    }
    return false;
  });
}

inline Set center(Ring const& r) {
  return select(r, [&](int x) {
    for (int y = 0; y < r.size; ++y) {
      if (r.mul(x, y) != r.mul(y, x)) {
        return false;
      }
    }
    return true;
  });
}

// 1 - xu in U for every unit u.
inline Set delta(Ring const& r) {
  auto const us = units(r);
  return select(r, [&](int x) {
    for (int u : us) {
      if (!is_unit(r, r.sub(r.one, r.mul(x, u)))) {
        return false;
      }
    }
    return true;
  });
}

// 1 - rx in U for every r.
inline Set jacobson(Ring const& r) {
  return select(r, [&](int x) {
    for (int y = 0; y < r.size; ++y) {
      if (!is_unit(r, r.sub(r.one, r.mul(y, x)))) {
        return false;
      }
    }
    return true;
  });
}

inline Set comm(Ring const& r, int a) {
  return select(r, [&](int x) { return r.mul(a, x) == r.mul(x, a); });
}

inline Set comm2(Ring const& r, int a) {
  auto const c = comm(r, a);
  return select(r, [&](int y) {
    for (int x : c) {
      if (r.mul(x, y) != r.mul(y, x)) {
        return false;
      }
    }
    return true;
  });
}

inline Set qnil(Ring const& r) {
  return select(r, [&](int a) {
    for (int x : comm(r, a)) {
      if (!is_unit(r, r.add(r.one, r.mul(a, x)))) {
        return false;
      }
    }
    return true;
  });
}

inline Set delta_spectral(Ring const& r, int a) {
  auto const d = delta(r);
  auto const c2 = comm2(r, a);
  Set out;
  for (int p : idempotents(r)) {
    if (c2.count(p) != 0 && d.count(r.add(a, p)) != 0) {
      out.insert(p);
    }
  }
  return out;
}

inline bool delta_quasipolar(Ring const& r) {
  for (int a = 0; a < r.size; ++a) {
    if (delta_spectral(r, a).empty()) {
      return false;
    }
  }
  return true;
}

inline bool abelian(Ring const& r) {
  auto const c = center(r);
  for (int e : idempotents(r)) {
    if (c.count(e) == 0) {
      return false;
    }
  }
  return true;
}

// Non-units form an additive subgroup.
inline bool local(Ring const& r) {
  auto const us = units(r);
  for (int x = 0; x < r.size; ++x) {
    for (int y = 0; y < r.size; ++y) {
      if (us.count(x) == 0 && us.count(y) == 0 && us.count(r.add(x, y)) != 0) {
        return false;
      }
    }
  }
  return true;
}

inline Set to_set(deltaring::ElementSet const& s) {
  Set out;
  for (auto i : s.indices()) {
    out.insert(static_cast<int>(i));
  }
  return out;
}

}  // namespace oracle
