#include "noncyc/group_builder.hpp"

#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <sstream>
#include <unordered_map>

#include "noncyc/error.hpp"
#include "noncyc/number_theory.hpp"

namespace noncyc {

namespace {

using json = nlohmann::json;

void check_cap(std::size_t order, const BuildOptions& options, const std::string& what) {
  if (order > options.element_cap)
    throw CapExceededError(what + " has order " + std::to_string(order) + ", above the element cap of " +
                           std::to_string(options.element_cap));
}

FiniteGroup finish(std::size_t n, std::vector<Element> table, std::vector<std::string> names,
                   const BuildOptions& options) {
  return FiniteGroup::from_table(n, std::move(table), std::move(names),
                                 options.paranoid ? FiniteGroup::Validation::kFull
                                                  : FiniteGroup::Validation::kStructural);
}

/// Builds a table from a product rule on indices 0..n-1 with identity 0.
template <typename Mul>
std::vector<Element> tabulate(std::size_t n, Mul&& mul) {
  std::vector<Element> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Element>(mul(i, j));
  return t;
}

std::string power_name(const std::string& sym, std::size_t e) {
  if (e == 0) return "";
  if (e == 1) return sym;
  return sym + "^" + std::to_string(e);
}

std::string join_word(const std::string& a, const std::string& b) {
  if (a.empty() && b.empty()) return "1";
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + " " + b;
}

FiniteGroup build_cyclic(std::size_t n, const BuildOptions& o) {
  check_cap(n, o, "Cyclic");
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = i == 0 ? "1" : power_name("a", i);
  return finish(n, tabulate(n, [n](std::size_t i, std::size_t j) { return (i + j) % n; }), std::move(names), o);
}

FiniteGroup build_product(const std::vector<FiniteGroup>& fs, const BuildOptions& o) {
  std::size_t n = 1;
  for (const auto& f : fs) {
    n *= f.order();
    check_cap(n, o, "DirectProduct");
  }
  // Mixed radix with the first factor most significant.
  auto digits = [&](std::size_t idx) {
    std::vector<std::size_t> d(fs.size());
    for (std::size_t k = fs.size(); k-- > 0;) {
      d[k] = idx % fs[k].order();
      idx /= fs[k].order();
    }
    return d;
  };
  std::vector<std::vector<std::size_t>> dig(n);
  for (std::size_t i = 0; i < n; ++i) dig[i] = digits(i);
  auto table = tabulate(n, [&](std::size_t i, std::size_t j) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < fs.size(); ++k)
      idx = idx * fs[k].order() + fs[k].mul(static_cast<Element>(dig[i][k]), static_cast<Element>(dig[j][k]));
    return idx;
  });
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = "(";
    for (std::size_t k = 0; k < fs.size(); ++k) s += (k ? "," : "") + fs[k].name(static_cast<Element>(dig[i][k]));
    names[i] = s + ")";
  }
  return finish(n, std::move(table), std::move(names), o);
}

FiniteGroup build_dihedral(std::size_t m, const BuildOptions& o) {
  const std::size_t n = 2 * m;
  check_cap(n, o, "Dihedral");
  // index = i + m*j for r^i s^j
  auto table = tabulate(n, [m](std::size_t x, std::size_t y) {
    std::size_t i1 = x % m, j1 = x / m, i2 = y % m, j2 = y / m;
    std::size_t i = j1 ? (i1 + m - i2) % m : (i1 + i2) % m;
    return i + m * ((j1 + j2) % 2);
  });
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) names[x] = join_word(power_name("r", x % m), x / m ? "s" : "");
  return finish(n, std::move(table), std::move(names), o);
}

FiniteGroup build_dicyclic(std::size_t m, const BuildOptions& o) {
  const std::size_t n = 4 * m, a = 2 * m;
  check_cap(n, o, "Dicyclic");
  // index = i + 2m*j for a^i x^j; a^{2m} = 1, x^2 = a^m, x a x^-1 = a^-1
  auto table = tabulate(n, [a, m](std::size_t u, std::size_t v) {
    std::size_t i1 = u % a, j1 = u / a, i2 = v % a, j2 = v / a;
    std::size_t i = j1 ? (i1 + a - i2) % a : (i1 + i2) % a;
    std::size_t j = j1 + j2;
    if (j == 2) {
      i = (i + m) % a;
      j = 0;
    }
    return i + a * j;
  });
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) names[x] = join_word(power_name("a", x % a), x / a ? "x" : "");
  return finish(n, std::move(table), std::move(names), o);
}

FiniteGroup build_semidirect(const spec::SemidirectCyclic& s, const BuildOptions& o) {
  const std::size_t n = s.n, m = s.m, total = n * m;
  check_cap(total, o, "SemidirectCyclic");
  std::vector<std::size_t> rpow(m);
  for (std::size_t j = 0; j < m; ++j) rpow[j] = powmod(s.r, j, n);
  // index = i + n*j for c^i d^j; d c d^-1 = c^r
  auto table = tabulate(total, [&](std::size_t u, std::size_t v) {
    std::size_t i1 = u % n, j1 = u / n, i2 = v % n, j2 = v / n;
    return (i1 + rpow[j1] * i2) % n + n * ((j1 + j2) % m);
  });
  std::vector<std::string> names(total);
  for (std::size_t x = 0; x < total; ++x) names[x] = join_word(power_name("c", x % n), power_name("d", x / n));
  return finish(total, std::move(table), std::move(names), o);
}

/// Breadth-first closure of generators under right multiplication. Returns the
/// elements in discovery order (identity first) and the Cayley table, built
/// from the spanning tree without hashing products.
template <typename T, typename Key, typename Mul>
FiniteGroup close_generators(const T& identity, const std::vector<T>& gens, Mul&& mul, Key&& key,
                             std::function<std::string(const T&)> namer, const BuildOptions& o,
                             const std::string& what) {
  std::vector<T> elems{identity};
  std::unordered_map<decltype(key(identity)), Element> index{{key(identity), 0}};
  std::vector<std::vector<Element>> right;  // right[k][g] = index of elems[k] * gens[g]
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    right.emplace_back(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
      T prod = mul(elems[k], gens[g]);
      auto kk = key(prod);
      auto it = index.find(kk);
      if (it == index.end()) {
        if (elems.size() + 1 > o.element_cap)
          throw CapExceededError(what + ": closure exceeds the element cap of " + std::to_string(o.element_cap));
        it = index.emplace(kk, static_cast<Element>(elems.size())).first;
        elems.push_back(std::move(prod));
        parent.push_back(static_cast<Element>(k));
        via.push_back(g);
      }
      right[k][g] = it->second;
    }
  }
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    table[i * n] = static_cast<Element>(i);
    for (std::size_t j = 1; j < n; ++j) table[i * n + j] = right[table[i * n + parent[j]]][via[j]];
  }
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = namer(elems[i]);
  return finish(n, std::move(table), std::move(names), o);
}

using Perm = std::vector<std::uint16_t>;

Perm compose(const Perm& x, const Perm& y) {
  // apply x, then y
  Perm r(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) r[p] = y[x[p]];
  return r;
}

std::string perm_key(const Perm& p) { return {reinterpret_cast<const char*>(p.data()), p.size() * sizeof(p[0])}; }

std::string cycle_name(const Perm& p, const std::function<std::string(std::size_t)>& label) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (done[s] || p[s] == s) continue;
    out += "(";
    std::size_t c = s;
    bool first = true;
    while (!done[c]) {
      done[c] = true;
      out += (first ? "" : ",") + label(c);
      first = false;
      c = p[c];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

FiniteGroup close_perms(const std::vector<Perm>& gens, std::size_t degree, const BuildOptions& o,
                        const std::string& what, std::function<std::string(std::size_t)> label) {
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint16_t>(i);
  return close_generators<Perm>(
      id, gens, compose, perm_key, [&](const Perm& p) { return cycle_name(p, label); }, o, what);
}

std::string one_based(std::size_t i) { return std::to_string(i + 1); }

FiniteGroup build_symmetric(std::size_t k, bool alternating, const BuildOptions& o) {
  std::vector<Perm> gens;
  auto ident = [k] {
    Perm p(k);
    for (std::size_t i = 0; i < k; ++i) p[i] = static_cast<std::uint16_t>(i);
    return p;
  };
  if (!alternating) {
    if (k >= 2) {
      Perm t = ident();
      std::swap(t[0], t[1]);
      gens.push_back(t);
      Perm c(k);
      for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<std::uint16_t>((i + 1) % k);
      gens.push_back(c);
    }
  } else {
    for (std::size_t i = 2; i < k; ++i) {
      Perm c = ident();  // (0 1 i)
      c[0] = 1;
      c[1] = static_cast<std::uint16_t>(i);
      c[i] = 0;
      gens.push_back(c);
    }
  }
  return close_perms(gens, k, o, alternating ? "Alternating" : "Symmetric", one_based);
}

/// GF(q) for prime powers q <= 9. Elements are base-p digit strings of
/// polynomial coefficients (digit i is the coefficient of x^i).
class SmallField {
 public:
  explicit SmallField(std::size_t q) : q_(q) {
    auto pp = as_prime_power(q);
    if (!pp) throw InvalidSpecError("field order " + std::to_string(q) + " is not a prime power");
    p_ = pp->first;
    k_ = pp->second;
    // x^k reduction: coefficients of x^k as a combination of lower powers.
    std::vector<std::size_t> red(k_, 0);
    if (k_ == 1) {
    } else if (q == 4) {
      red = {1, 1};  // x^2 = x + 1
    } else if (q == 8) {
      red = {1, 1, 0};  // x^3 = x + 1
    } else if (q == 9) {
      red = {2, 0};  // x^2 = -1
    } else {
      throw InvalidSpecError("unsupported field order " + std::to_string(q));
    }
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b) {
        auto da = digits(a), db = digits(b);
        std::vector<std::size_t> s(k_);
        for (std::size_t i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
        add_[a * q + b] = value(s);
        std::vector<std::size_t> prod(2 * k_, 0);
        for (std::size_t i = 0; i < k_; ++i)
          for (std::size_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (std::size_t d = 2 * k_ - 1; d >= k_ && d < 2 * k_; --d) {
          std::size_t c = prod[d];
          if (!c) continue;
          prod[d] = 0;
          for (std::size_t i = 0; i < k_; ++i) prod[d - k_ + i] = (prod[d - k_ + i] + c * red[i]) % p_;
        }
        prod.resize(k_);
        mul_[a * q + b] = value(prod);
      }
    inv_.assign(q, 0);
    neg_.assign(q, 0);
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b) {
        if (mul(a, b) == 1) inv_[a] = b;
        if (add(a, b) == 0) neg_[a] = b;
      }
  }

  std::size_t order() const { return q_; }
  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * q_ + b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * q_ + b]; }
  std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg_[b]); }
  std::size_t inv(std::size_t a) const { return inv_[a]; }

 private:
  std::vector<std::size_t> digits(std::size_t a) const {
    std::vector<std::size_t> d(k_);
    for (std::size_t i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
    return d;
  }
  std::size_t value(const std::vector<std::size_t>& d) const {
    std::size_t v = 0;
    for (std::size_t i = k_; i-- > 0;) v = v * p_ + d[i];
    return v;
  }

  std::size_t q_, p_ = 0, k_ = 0;
  std::vector<std::size_t> add_, mul_, inv_, neg_;
};

struct Mat2 {
  std::size_t a, b, c, d;
};

std::vector<Mat2> sl2_generators(const SmallField& f) {
  // Elementary transvections generate SL2(q).
  std::vector<Mat2> gens;
  for (std::size_t t = 1; t < f.order(); ++t) {
    gens.push_back({1, t, 0, 1});
    gens.push_back({1, 0, t, 1});
  }
  return gens;
}

FiniteGroup build_sl2(std::size_t q, const BuildOptions& o) {
  SmallField f(q);
  auto mul = [&f](const Mat2& x, const Mat2& y) {
    return Mat2{f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
                f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)), f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
  };
  auto key = [q](const Mat2& m) { return ((m.a * q + m.b) * q + m.c) * q + m.d; };
  auto namer = [](const Mat2& m) {
    return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) + "," +
           std::to_string(m.d) + "]]";
  };
  return close_generators<Mat2>(Mat2{1, 0, 0, 1}, sl2_generators(f), mul, key, namer, o, "SL2");
}

FiniteGroup build_psl2(std::size_t q, const BuildOptions& o) {
  SmallField f(q);
  const std::size_t inf = q;
  // Möbius action z -> (a z + b) / (c z + d) on the q+1 points; index q is infinity.
  auto act = [&](const Mat2& m, std::size_t z) -> std::size_t {
    if (z == inf) return m.c == 0 ? inf : f.mul(m.a, f.inv(m.c));
    std::size_t num = f.add(f.mul(m.a, z), m.b);
    std::size_t den = f.add(f.mul(m.c, z), m.d);
    return den == 0 ? inf : f.mul(num, f.inv(den));
  };
  std::vector<Perm> gens;
  for (const auto& m : sl2_generators(f)) {
    Perm p(q + 1);
    for (std::size_t z = 0; z <= q; ++z) p[z] = static_cast<std::uint16_t>(act(m, z));
    gens.push_back(p);
  }
  auto label = [inf](std::size_t z) { return z == inf ? std::string("inf") : std::to_string(z); };
  return close_perms(gens, q + 1, o, "PSL2", label);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

FiniteGroup cayley_from_json(const json& doc, const BuildOptions& o) {
  try {
    const std::size_t n = doc.at("order").get<std::size_t>();
    check_cap(n, o, "Cayley table");
    std::vector<Element> table;
    table.reserve(n * n);
    const auto& t = doc.at("table");
    if (!t.is_array()) throw ParseError("'table' must be an array");
    for (const auto& row : t) {
      if (row.is_array()) {
        if (row.size() != n) throw ParseError("table row has wrong length");
        for (const auto& v : row) table.push_back(v.get<Element>());
      } else {
        table.push_back(row.get<Element>());
      }
    }
    std::vector<std::string> names;
    if (doc.contains("names")) names = doc.at("names").get<std::vector<std::string>>();
    return FiniteGroup::from_table(n, std::move(table), std::move(names), FiniteGroup::Validation::kFull);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed Cayley-table document: ") + e.what());
  }
}

FiniteGroup perm_from_json(const json& doc, const BuildOptions& o) {
  try {
    const std::size_t degree = doc.at("degree").get<std::size_t>();
    auto gens = doc.at("generators").get<std::vector<std::vector<std::size_t>>>();
    for (const auto& g : gens)
      if (g.size() != degree) throw ParseError("generator length differs from degree");
    return group_from_permutations(gens, o);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed permutation-generator document: ") + e.what());
  }
}

}  // namespace

FiniteGroup group_from_permutations(const std::vector<std::vector<std::size_t>>& generators, const BuildOptions& o) {
  std::size_t degree = generators.empty() ? 0 : generators.front().size();
  if (degree > kMaxTableOrder) throw InvalidSpecError("permutation degree too large");
  std::vector<Perm> gens;
  for (const auto& g : generators) {
    if (g.size() != degree) throw InvalidSpecError("generators have different degrees");
    std::vector<bool> hit(degree, false);
    Perm p(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      if (g[i] >= degree || hit[g[i]]) throw InvalidSpecError("generator is not a permutation");
      hit[g[i]] = true;
      p[i] = static_cast<std::uint16_t>(g[i]);
    }
    gens.push_back(std::move(p));
  }
  return close_perms(gens, degree, o, "FromPermGenerators", [](std::size_t i) { return std::to_string(i); });
}

FiniteGroup build_group(const GroupSpec& s, const BuildOptions& o) {
  validate_spec(s);
  if (auto v = s.get_if<spec::Cyclic>()) return build_cyclic(v->n, o);
  if (auto v = s.get_if<spec::ElementaryAbelian>()) {
    check_cap(ipow(v->p, v->k), o, "ElementaryAbelian");
    std::vector<FiniteGroup> fs(v->k, build_cyclic(v->p, o));
    return build_product(fs, o);
  }
  if (auto v = s.get_if<spec::DirectProduct>()) {
    std::vector<FiniteGroup> fs;
    for (const auto& f : v->factors) fs.push_back(build_group(f, o));
    if (fs.size() == 1) return fs.front();
    return build_product(fs, o);
  }
  if (auto v = s.get_if<spec::Dihedral>()) return build_dihedral(v->m, o);
  if (auto v = s.get_if<spec::Dicyclic>()) return build_dicyclic(v->m, o);
  if (auto v = s.get_if<spec::SemidirectCyclic>()) return build_semidirect(*v, o);
  if (auto v = s.get_if<spec::Symmetric>()) return build_symmetric(v->k, false, o);
  if (auto v = s.get_if<spec::Alternating>()) return build_symmetric(v->k, true, o);
  if (auto v = s.get_if<spec::SL2>()) return build_sl2(v->q, o);
  if (auto v = s.get_if<spec::PSL2>()) return build_psl2(v->q, o);
  if (auto v = s.get_if<spec::FromCayleyFile>()) return load_cayley_file(v->path, o);
  if (auto v = s.get_if<spec::FromPermGenerators>()) return load_perm_generators(v->path, o);
  throw InvalidSpecError("unhandled group spec");
}

FiniteGroup load_cayley_file(const std::string& path, const BuildOptions& o) {
  return cayley_from_json(read_json_file(path), o);
}

FiniteGroup parse_cayley_document(const std::string& text, const BuildOptions& o) {
  try {
    return cayley_from_json(json::parse(text), o);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::string cayley_document(const FiniteGroup& g) {
  const std::size_t n = g.order();
  // Compact layout: one table row per line.
  std::ostringstream out;
  out << "{\n  \"order\": " << n << ",\n  \"names\": " << json(g.names()).dump() << ",\n  \"table\": [\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "    [";
    for (std::size_t j = 0; j < n; ++j)
      out << (j ? "," : "") << g.mul(static_cast<Element>(i), static_cast<Element>(j));
    out << "]" << (i + 1 < n ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

void write_cayley_file(const FiniteGroup& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << cayley_document(g);
  if (!out) throw Error("failed writing '" + path + "'");
}

FiniteGroup load_perm_generators(const std::string& path, const BuildOptions& o) {
  return perm_from_json(read_json_file(path), o);
}

FiniteGroup parse_perm_document(const std::string& text, const BuildOptions& o) {
  try {
    return perm_from_json(json::parse(text), o);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace noncyc
