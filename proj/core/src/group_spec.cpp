#include "noncyc/group_spec.hpp"

#include <cctype>
#include <filesystem>
#include <numeric>

#include "noncyc/error.hpp"
#include "noncyc/number_theory.hpp"

namespace noncyc {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string num(std::size_t v) { return std::to_string(v); }

std::string args(std::initializer_list<std::size_t> vs) {
  std::string out;
  for (auto v : vs) {
    if (!out.empty()) out += ",";
    out += num(v);
  }
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  GroupSpec parse_all() {
    GroupSpec s = parse_one();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return s;
  }

 private:
  GroupSpec parse_one() {
    skip_ws();
    std::string name;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      name += text_[pos_++];
    if (name.empty()) fail("expected a group constructor name");
    skip_ws();
    expect('(');
    if (name == "FromCayleyFile" || name == "FromPermGenerators") {
      auto close = text_.rfind(')');
      if (close == std::string::npos || close < pos_) fail("unterminated path argument");
      std::string path = trim(text_.substr(pos_, close - pos_));
      pos_ = close + 1;
      if (path.empty()) fail("empty path");
      if (name == "FromCayleyFile") return spec::FromCayleyFile{path};
      return spec::FromPermGenerators{path};
    }
    if (name == "DirectProduct") {
      spec::DirectProduct dp;
      dp.factors.push_back(parse_one());
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        dp.factors.push_back(parse_one());
        skip_ws();
      }
      expect(')');
      return dp;
    }
    std::vector<std::size_t> a;
    a.push_back(parse_int());
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      a.push_back(parse_int());
      skip_ws();
    }
    expect(')');
    auto need = [&](std::size_t k) {
      if (a.size() != k) fail(name + " takes " + num(k) + " argument(s)");
    };
    if (name == "Cyclic") return need(1), GroupSpec(spec::Cyclic{a[0]});
    if (name == "ElementaryAbelian") return need(2), GroupSpec(spec::ElementaryAbelian{a[0], a[1]});
    if (name == "Dihedral") return need(1), GroupSpec(spec::Dihedral{a[0]});
    if (name == "Dicyclic") return need(1), GroupSpec(spec::Dicyclic{a[0]});
    if (name == "SemidirectCyclic") return need(3), GroupSpec(spec::SemidirectCyclic{a[0], a[1], a[2]});
    if (name == "Symmetric") return need(1), GroupSpec(spec::Symmetric{a[0]});
    if (name == "Alternating") return need(1), GroupSpec(spec::Alternating{a[0]});
    if (name == "SL2") return need(1), GroupSpec(spec::SL2{a[0]});
    if (name == "PSL2") return need(1), GroupSpec(spec::PSL2{a[0]});
    fail("unknown group constructor '" + name + "'");
  }

  std::size_t parse_int() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stoul(text_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  static std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\n");
    auto e = s.find_last_not_of(" \t\n");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("cannot parse group spec '" + text_ + "' at offset " + num(pos_) + ": " + msg);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::size_t factorial(std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace

std::string to_string(const GroupSpec& s) {
  return std::visit(
      Overloaded{
          [](const spec::Cyclic& v) { return "Cyclic(" + num(v.n) + ")"; },
          [](const spec::ElementaryAbelian& v) { return "ElementaryAbelian(" + args({v.p, v.k}) + ")"; },
          [](const spec::DirectProduct& v) {
            std::string out = "DirectProduct(";
            for (std::size_t i = 0; i < v.factors.size(); ++i) out += (i ? "," : "") + to_string(v.factors[i]);
            return out + ")";
          },
          [](const spec::Dihedral& v) { return "Dihedral(" + num(v.m) + ")"; },
          [](const spec::Dicyclic& v) { return "Dicyclic(" + num(v.m) + ")"; },
          [](const spec::SemidirectCyclic& v) { return "SemidirectCyclic(" + args({v.n, v.m, v.r}) + ")"; },
          [](const spec::Symmetric& v) { return "Symmetric(" + num(v.k) + ")"; },
          [](const spec::Alternating& v) { return "Alternating(" + num(v.k) + ")"; },
          [](const spec::SL2& v) { return "SL2(" + num(v.q) + ")"; },
          [](const spec::PSL2& v) { return "PSL2(" + num(v.q) + ")"; },
          [](const spec::FromCayleyFile& v) { return "FromCayleyFile(" + v.path + ")"; },
          [](const spec::FromPermGenerators& v) { return "FromPermGenerators(" + v.path + ")"; },
      },
      s.value);
}

std::string display_name(const GroupSpec& s) {
  return std::visit(
      Overloaded{
          [](const spec::Cyclic& v) { return "C" + num(v.n); },
          [](const spec::ElementaryAbelian& v) { return v.k == 1 ? "C" + num(v.p) : "C" + num(v.p) + "^" + num(v.k); },
          [](const spec::DirectProduct& v) {
            std::string out;
            for (std::size_t i = 0; i < v.factors.size(); ++i) out += (i ? "x" : "") + display_name(v.factors[i]);
            return out;
          },
          [](const spec::Dihedral& v) { return "D" + num(2 * v.m); },
          [](const spec::Dicyclic& v) { return v.m == 2 ? std::string("Q8") : "Dic" + num(4 * v.m); },
          [](const spec::SemidirectCyclic& v) { return "C" + num(v.n) + ":C" + num(v.m) + "[" + num(v.r) + "]"; },
          [](const spec::Symmetric& v) { return "S" + num(v.k); },
          [](const spec::Alternating& v) { return "A" + num(v.k); },
          [](const spec::SL2& v) { return "SL2(" + num(v.q) + ")"; },
          [](const spec::PSL2& v) { return "PSL2(" + num(v.q) + ")"; },
          [](const spec::FromCayleyFile& v) {
            return "cayley:" + std::filesystem::path(v.path).stem().string();
          },
          [](const spec::FromPermGenerators& v) {
            return "perm:" + std::filesystem::path(v.path).stem().string();
          },
      },
      s.value);
}

GroupSpec parse_spec(const std::string& text) { return Parser(text).parse_all(); }

void validate_spec(const GroupSpec& s) {
  auto bad = [&](const std::string& why) { throw InvalidSpecError(to_string(s) + ": " + why); };
  std::visit(Overloaded{
                 [&](const spec::Cyclic& v) {
                   if (v.n < 1) bad("n must be positive");
                 },
                 [&](const spec::ElementaryAbelian& v) {
                   if (!is_prime(v.p)) bad("p must be prime");
                   if (v.k < 1) bad("rank must be positive");
                 },
                 [&](const spec::DirectProduct& v) {
                   if (v.factors.empty()) bad("needs at least one factor");
                   for (const auto& f : v.factors) validate_spec(f);
                 },
                 [&](const spec::Dihedral& v) {
                   if (v.m < 1) bad("m must be positive");
                 },
                 [&](const spec::Dicyclic& v) {
                   if (v.m < 1) bad("m must be positive");
                 },
                 [&](const spec::SemidirectCyclic& v) {
                   if (v.n < 1 || v.m < 1) bad("n and m must be positive");
                   if (std::gcd(v.r, v.n) != 1) bad("gcd(r, n) must be 1");
                   if (powmod(v.r, v.m, v.n) != 1 % v.n) bad("r^m must be 1 mod n");
                 },
                 [&](const spec::Symmetric& v) {
                   if (v.k < 1) bad("degree must be positive");
                 },
                 [&](const spec::Alternating& v) {
                   if (v.k < 1) bad("degree must be positive");
                 },
                 [&](const spec::SL2& v) {
                   if (!as_prime_power(v.q) || v.q > 9) bad("q must be a prime power <= 9");
                 },
                 [&](const spec::PSL2& v) {
                   if (!as_prime_power(v.q) || v.q > 9) bad("q must be a prime power <= 9");
                 },
                 [&](const spec::FromCayleyFile& v) {
                   if (v.path.empty()) bad("empty path");
                 },
                 [&](const spec::FromPermGenerators& v) {
                   if (v.path.empty()) bad("empty path");
                 },
             },
             s.value);
}

std::size_t spec_order(const GroupSpec& s) {
  return std::visit(Overloaded{
                        [](const spec::Cyclic& v) -> std::size_t { return v.n; },
                        [](const spec::ElementaryAbelian& v) -> std::size_t { return ipow(v.p, v.k); },
                        [](const spec::DirectProduct& v) -> std::size_t {
                          std::size_t r = 1;
                          for (const auto& f : v.factors) r *= spec_order(f);
                          return r;
                        },
                        [](const spec::Dihedral& v) -> std::size_t { return 2 * v.m; },
                        [](const spec::Dicyclic& v) -> std::size_t { return 4 * v.m; },
                        [](const spec::SemidirectCyclic& v) -> std::size_t { return v.n * v.m; },
                        [](const spec::Symmetric& v) -> std::size_t { return factorial(v.k); },
                        [](const spec::Alternating& v) -> std::size_t { return v.k < 2 ? 1 : factorial(v.k) / 2; },
                        [](const spec::SL2& v) -> std::size_t { return v.q * (v.q * v.q - 1); },
                        [](const spec::PSL2& v) -> std::size_t {
                          return v.q * (v.q * v.q - 1) / (v.q % 2 == 0 ? 1 : 2);
                        },
                        [](const spec::FromCayleyFile&) -> std::size_t { return 0; },
                        [](const spec::FromPermGenerators&) -> std::size_t { return 0; },
                    },
                    s.value);
}

}  // namespace noncyc
