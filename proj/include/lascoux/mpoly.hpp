#ifndef LASCOUX_MPOLY_HPP
#define LASCOUX_MPOLY_HPP

// Exact multivariate polynomials over Z in the variables b (printed for the
// K-theory deformation parameter) and z1..zN.  Every computation in this
// library runs inside Z[b, z1..zN]; there are no rational functions and no
// floating point anywhere.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lascoux {

using Int = boost::multiprecision::cpp_int;

// Exponent vector; index 0 is the exponent of b, index i>=1 of z_i.
using ExpVec = std::vector<int>;

inline int total_degree(const ExpVec& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

// Serialization order: total degree descending, ties broken by the exponent
// vector (e_b, e_1, ..., e_n) lexicographically descending.  map::begin() is
// the leading term.
struct TermOrder {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    int ta = total_degree(a), tb = total_degree(b);
    if (ta != tb) return ta > tb;
    return a > b;
  }
};

class MPoly {
 public:
  using TermMap = std::map<ExpVec, Int, TermOrder>;

  explicit MPoly(int n_vars = 0) : n_(n_vars) {
    if (n_vars < 0) throw std::invalid_argument("MPoly: negative n_vars");
  }

  static MPoly zero(int n) { return MPoly(n); }

  static MPoly constant(int n, Int c) {
    MPoly p(n);
    if (c != 0) p.terms_[ExpVec(n + 1, 0)] = std::move(c);
    return p;
  }

  static MPoly one(int n) { return constant(n, 1); }

  static MPoly beta(int n) {
    MPoly p(n);
    ExpVec e(n + 1, 0);
    e[0] = 1;
    p.terms_[e] = 1;
    return p;
  }

  // z_i, 1-based
  static MPoly z(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("MPoly::z: index out of range");
    MPoly p(n);
    ExpVec e(n + 1, 0);
    e[i] = 1;
    p.terms_[e] = 1;
    return p;
  }

  static MPoly monomial(int n, const ExpVec& e, Int c) {
    if (static_cast<int>(e.size()) != n + 1)
      throw std::invalid_argument("MPoly::monomial: exponent length mismatch");
    MPoly p(n);
    if (c != 0) p.terms_[e] = std::move(c);
    return p;
  }

  // z^alpha for an integer vector alpha of length n (b-exponent 0)
  static MPoly z_monomial(int n, const std::vector<int>& alpha) {
    if (static_cast<int>(alpha.size()) > n)
      throw std::invalid_argument("MPoly::z_monomial: too many exponents");
    ExpVec e(n + 1, 0);
    for (size_t i = 0; i < alpha.size(); ++i) e[i + 1] = alpha[i];
    return monomial(n, e, 1);
  }

  int n_vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  bool operator==(const MPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly operator-() const {
    MPoly r(n_);
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  MPoly& operator+=(const MPoly& o) {
    check_same(o);
    for (auto& [e, c] : o.terms_) {
      auto it = terms_.find(e);
      if (it == terms_.end()) {
        terms_.emplace(e, c);
      } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }

  MPoly& operator-=(const MPoly& o) { return *this += -o; }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_same(b);
    MPoly r(a.n_);
    for (auto& [ea, ca] : a.terms_)
      for (auto& [eb, cb] : b.terms_) {
        ExpVec e(ea.size());
        for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
          r.terms_.emplace(std::move(e), ca * cb);
        } else {
          it->second += ca * cb;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    return r;
  }

  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly scaled(const Int& c) const {
    MPoly r(n_);
    if (c == 0) return r;
    for (auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
  }

  MPoly pow(int k) const {
    if (k < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
    MPoly r = one(n_);
    for (int t = 0; t < k; ++t) r *= *this;
    return r;
  }

  // f(wz) where (wz)_i = z_{w(i)}: the exponent of z_i moves to z_{w(i)}.
  // b is untouched.  w is a one-line permutation of 1..n.
  MPoly permute_z(const std::vector<int>& w) const {
    if (static_cast<int>(w.size()) != n_)
      throw std::invalid_argument("MPoly::permute_z: size mismatch");
    MPoly r(n_);
    for (auto& [e, c] : terms_) {
      ExpVec f(e.size(), 0);
      f[0] = e[0];
      for (int i = 1; i <= n_; ++i) f[w[i - 1]] = e[i];
      r.terms_[std::move(f)] = c;
    }
    return r;
  }

  // Sets b = 0: drops every term with a positive b-exponent.
  MPoly beta_zero() const {
    MPoly r(n_);
    for (auto& [e, c] : terms_)
      if (e[0] == 0) r.terms_[e] = c;
    return r;
  }

  // Re-embeds a polynomial into m >= n variables, sending z_k to z_{target[k-1]}.
  MPoly remap_z(int m, const std::vector<int>& target) const {
    if (static_cast<int>(target.size()) != n_)
      throw std::invalid_argument("MPoly::remap_z: target length mismatch");
    MPoly r(m);
    for (auto& [e, c] : terms_) {
      ExpVec f(m + 1, 0);
      f[0] = e[0];
      for (int i = 1; i <= n_; ++i) {
        if (e[i] != 0) {
          if (target[i - 1] < 1 || target[i - 1] > m)
            throw std::invalid_argument("MPoly::remap_z: target index out of range");
          f[target[i - 1]] += e[i];
        }
      }
      auto it = r.terms_.find(f);
      if (it == r.terms_.end()) r.terms_.emplace(std::move(f), c);
      else { it->second += c; if (it->second == 0) r.terms_.erase(it); }
    }
    return r;
  }

  // Exact division: returns q with q*g == *this.  Throws if the remainder is
  // nonzero; a nonzero remainder always indicates a transcription bug in a
  // weight table or formula upstream.
  MPoly exact_divide(const MPoly& g) const {
    check_same(g);
    if (g.is_zero()) throw std::invalid_argument("MPoly::exact_divide: division by zero");
    MPoly f = *this;
    MPoly q(n_);
    const auto& glt = *g.terms_.begin();
    while (!f.terms_.empty()) {
      const auto& flt = *f.terms_.begin();
      ExpVec e(flt.first.size());
      for (size_t k = 0; k < e.size(); ++k) {
        e[k] = flt.first[k] - glt.first[k];
        if (e[k] < 0) throw std::domain_error("MPoly::exact_divide: nonzero remainder");
      }
      Int c = flt.second / glt.second;
      if (c * glt.second != flt.second)
        throw std::domain_error("MPoly::exact_divide: nonzero remainder");
      MPoly t = monomial(n_, e, c);
      q += t;
      f -= t * g;
    }
    return q;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, c] : terms_) {
      Int a = c;
      if (first) {
        if (a < 0) { out << '-'; a = -a; }
        first = false;
      } else {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      std::vector<std::string> factors;
      if (e[0] > 0) factors.push_back(e[0] == 1 ? "b" : "b^" + std::to_string(e[0]));
      for (int i = 1; i <= n_; ++i)
        if (e[i] > 0) {
          std::string f = "z" + std::to_string(i);
          if (e[i] > 1) f += "^" + std::to_string(e[i]);
          factors.push_back(std::move(f));
        }
      if (factors.empty()) {
        out << a;
      } else {
        if (a != 1) out << a << '*';
        for (size_t k = 0; k < factors.size(); ++k) {
          if (k) out << '*';
          out << factors[k];
        }
      }
    }
    return out.str();
  }

  // Parses the exact format produced by to_string().
  static MPoly parse(const std::string& text, int n_vars) {
    MPoly r(n_vars);
    std::string s = text;
    // trim
    auto issp = [](char c) { return c == ' ' || c == '\t'; };
    size_t b = 0, e = s.size();
    while (b < e && issp(s[b])) ++b;
    while (e > b && issp(s[e - 1])) --e;
    s = s.substr(b, e - b);
    if (s.empty() || s == "0") return r;
    int sign = 1;
    size_t pos = 0;
    if (s[0] == '-') { sign = -1; pos = 1; }
    else if (s[0] == '+') { pos = 1; }
    while (pos < s.size()) {
      size_t next = s.size();
      int next_sign = 1;
      for (size_t k = pos; k + 2 < s.size(); ++k) {
        if (s[k] == ' ' && (s[k + 1] == '+' || s[k + 1] == '-') && s[k + 2] == ' ') {
          next = k;
          next_sign = (s[k + 1] == '+') ? 1 : -1;
          break;
        }
      }
      std::string term = s.substr(pos, next - pos);
      r += parse_term(term, sign, n_vars);
      sign = next_sign;
      pos = (next == s.size()) ? next : next + 3;
    }
    return r;
  }

 private:
  void check_same(const MPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("MPoly: mismatched n_vars");
  }

  static MPoly parse_term(const std::string& term, int sign, int n_vars) {
    ExpVec e(n_vars + 1, 0);
    Int coeff = 1;
    size_t pos = 0;
    bool saw_factor = false;
    while (pos < term.size()) {
      size_t star = term.find('*', pos);
      std::string f = term.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
      if (f.empty()) throw std::invalid_argument("MPoly::parse: empty factor in '" + term + "'");
      if (f[0] == 'b' || f[0] == 'z') {
        int var;
        size_t caret = f.find('^');
        std::string head = f.substr(0, caret);
        int expo = 1;
        if (caret != std::string::npos) expo = std::stoi(f.substr(caret + 1));
        if (head == "b") {
          var = 0;
        } else {
          if (head.size() < 2 || head[0] != 'z')
            throw std::invalid_argument("MPoly::parse: bad factor '" + f + "'");
          var = std::stoi(head.substr(1));
          if (var < 1 || var > n_vars)
            throw std::invalid_argument("MPoly::parse: variable out of range in '" + f + "'");
        }
        e[var] += expo;
      } else {
        coeff *= Int(f);
      }
      saw_factor = true;
      if (star == std::string::npos) break;
      pos = star + 1;
    }
    if (!saw_factor) throw std::invalid_argument("MPoly::parse: empty term");
    return monomial(n_vars, e, sign * coeff);
  }

  int n_;
  TermMap terms_;
};

// prod_{i<j} (z_i - z_j)
inline MPoly vandermonde(int n) {
  MPoly v = MPoly::one(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) v *= MPoly::z(n, i) - MPoly::z(n, j);
  return v;
}

// 1 + b*z_i
inline MPoly one_plus_beta_z(int n, int i) {
  return MPoly::one(n) + MPoly::beta(n) * MPoly::z(n, i);
}

}  // namespace lascoux

#endif
