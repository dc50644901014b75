#include "oracle.hpp"

#include <algorithm>

namespace oracle {

namespace {

Fuzzy ones(int n) { return Fuzzy(static_cast<std::size_t>(n), Rat(1)); }

// Patterns as strings: 'f' is the subject, '1' the constant.
const char* const kPatterns[] = {"f1f", "1ff1", "1f1f", "f1f1", "1f1f1"};

}  // namespace

Set product(const Table& t, const Set& lhs, const Set& rhs) {
  Set out;
  for (int a : lhs) {
    for (int b : rhs) {
      const Set& c = t.cells[a][b];
      out.insert(c.begin(), c.end());
    }
  }
  return out;
}

bool associative(const Table& t) {
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) {
      for (int z = 0; z < t.n; ++z) {
        Set left;
        for (int u : t.cells[x][y]) {
          left.insert(t.cells[u][z].begin(), t.cells[u][z].end());
        }
        Set right;
        for (int v : t.cells[y][z]) {
          right.insert(t.cells[x][v].begin(), t.cells[x][v].end());
        }
        if (left != right) return false;
      }
    }
  }
  return true;
}

std::vector<std::pair<int, int>> pairs_containing(const Table& t, int a) {
  std::vector<std::pair<int, int>> out;
  for (int y = 0; y < t.n; ++y) {
    for (int z = 0; z < t.n; ++z) {
      if (t.cells[y][z].count(a) != 0) out.emplace_back(y, z);
    }
  }
  return out;
}

Fuzzy compose(const Table& t, const Fuzzy& f, const Fuzzy& g) {
  Fuzzy out(static_cast<std::size_t>(t.n), Rat(0));
  for (int a = 0; a < t.n; ++a) {
    const auto pairs = pairs_containing(t, a);
    if (pairs.empty()) continue;
    Rat best = -1;
    for (auto [y, z] : pairs) best = std::max(best, std::min(f[y], g[z]));
    out[a] = best;
  }
  return out;
}

bool class_holds_at(const Table& t, int cls, int a) {
  const int n = t.n;
  const Set self{a};
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        Set s;
        switch (cls) {
          case 0:  // (a o x) * {a}
            s = product(t, t.cells[a][x], self);
            break;
          case 1:  // (x o a) * (a o y)
            s = product(t, t.cells[x][a], t.cells[a][y]);
            break;
          case 2:  // (x o a) * (y o a)
            s = product(t, t.cells[x][a], t.cells[y][a]);
            break;
          case 3:  // (a o x) * (a o y)
            s = product(t, t.cells[a][x], t.cells[a][y]);
            break;
          default:  // ((x o a) * (y o a)) * {z}
            s = product(t, product(t, t.cells[x][a], t.cells[y][a]), Set{z});
            break;
        }
        if (s.count(a) != 0) return true;
      }
    }
  }
  return false;
}

bool class_holds(const Table& t, int cls) {
  for (int a = 0; a < t.n; ++a) {
    if (!class_holds_at(t, cls, a)) return false;
  }
  return true;
}

Fuzzy pattern_right_assoc(const Table& t, int cls, const Fuzzy& f) {
  const std::string pattern = kPatterns[cls];
  const Fuzzy top = ones(t.n);
  Fuzzy acc = pattern.back() == 'f' ? f : top;
  for (int i = static_cast<int>(pattern.size()) - 2; i >= 0; --i) {
    acc = compose(t, pattern[i] == 'f' ? f : top, acc);
  }
  return acc;
}

void for_each_table(int n, const std::function<void(const Table&)>& visit) {
  Table t;
  t.n = n;
  t.cells.assign(n, std::vector<Set>(n));
  std::vector<Set> subsets;
  for (int mask = 1; mask < (1 << n); ++mask) {
    Set s;
    for (int e = 0; e < n; ++e) {
      if (mask & (1 << e)) s.insert(e);
    }
    subsets.push_back(s);
  }
  std::function<void(int)> fill = [&](int slot) {
    if (slot == n * n) {
      visit(t);
      return;
    }
    for (const Set& s : subsets) {
      t.cells[slot / n][slot % n] = s;
      fill(slot + 1);
    }
  };
  fill(0);
}

bool right_ideal(const Table& t, const Fuzzy& f) {
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) {
      for (int u : t.cells[x][y]) {
        if (!(f[u] >= f[x])) return false;
      }
    }
  }
  return true;
}

bool left_ideal(const Table& t, const Fuzzy& f) {
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) {
      for (int u : t.cells[x][y]) {
        if (!(f[u] >= f[y])) return false;
      }
    }
  }
  return true;
}

Table from_hyperop(const hsg::HyperOp& h) {
  Table t;
  t.n = static_cast<int>(h.order());
  t.cells.assign(t.n, std::vector<Set>(t.n));
  for (int a = 0; a < t.n; ++a) {
    for (int b = 0; b < t.n; ++b) t.cells[a][b] = from_element_set(h.cell(a, b));
  }
  return t;
}

hsg::HyperOp to_hyperop(const Table& t) {
  std::vector<hsg::ElementSet> cells;
  for (int a = 0; a < t.n; ++a) {
    for (int b = 0; b < t.n; ++b) {
      hsg::ElementSet s;
      for (int e : t.cells[a][b]) s.insert(static_cast<hsg::Element>(e));
      cells.push_back(s);
    }
  }
  return hsg::HyperOp(static_cast<std::size_t>(t.n), std::move(cells));
}

Fuzzy from_fuzzy(const hsg::FuzzySubset& f) {
  Fuzzy out;
  for (auto v : f.values()) out.emplace_back(v.numerator(), v.denominator());
  return out;
}

Set from_element_set(hsg::ElementSet s) {
  Set out;
  for (hsg::Element e = 0; e < hsg::kMaxOrder; ++e) {
    if (s.mask() & (1U << e)) out.insert(static_cast<int>(e));
  }
  return out;
}

}  // namespace oracle
