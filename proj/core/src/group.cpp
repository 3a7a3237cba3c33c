#include "caystab/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>

#include "caystab/errors.hpp"

namespace caystab {

namespace {

long long mod_pow(long long base, long long exp, long long mod) {
  long long result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

} // namespace

int FiniteGroup::mul(int g, int h) const {
  if (g < 0 || g >= order_ || h < 0 || h >= order_)
    throw InvalidParameterError("element index outside group");
  return table_[g][h];
}

int FiniteGroup::inv(int g) const {
  if (g < 0 || g >= order_)
    throw InvalidParameterError("element index outside group");
  return inverses_[g];
}

int FiniteGroup::power(int g, long long k) const {
  if (g < 0 || g >= order_)
    throw InvalidParameterError("element index outside group");
  int base = g;
  if (k < 0) {
    base = inverses_[g];
    k = -k;
  }
  int acc = identity_;
  while (k > 0) {
    if (k & 1) acc = table_[acc][base];
    base = table_[base][base];
    k >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(int g) const {
  if (g < 0 || g >= order_)
    throw InvalidParameterError("element index outside group");
  int k = 1;
  int acc = g;
  while (acc != identity_) {
    acc = table_[acc][g];
    ++k;
  }
  return k;
}

const std::string& FiniteGroup::element_name(int g) const {
  if (g < 0 || g >= order_)
    throw InvalidParameterError("element index outside group");
  return names_[g];
}

const std::vector<int>& FiniteGroup::abelian_factors() const {
  if (kind_ != Kind::Abelian)
    throw InvalidParameterError("group was not built from abelian factors");
  return factors_;
}

std::vector<int> FiniteGroup::to_vector(int g) const {
  if (g < 0 || g >= order_)
    throw InvalidParameterError("element index outside group");
  const auto& factors = abelian_factors();
  std::vector<int> residues(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    residues[i] = g % factors[i];
    g /= factors[i];
  }
  return residues;
}

int FiniteGroup::from_vector(const std::vector<int>& residues) const {
  const auto& factors = abelian_factors();
  if (residues.size() != factors.size())
    throw InvalidParameterError("residue vector length mismatch");
  int index = 0;
  for (std::size_t i = factors.size(); i-- > 0;) {
    int r = residues[i] % factors[i];
    if (r < 0) r += factors[i];
    index = index * factors[i] + r;
  }
  return index;
}

const FiniteGroup::SemidirectParams& FiniteGroup::semidirect_params() const {
  if (kind_ != Kind::Semidirect)
    throw InvalidParameterError("group was not built as a semidirect product");
  return sd_;
}

void FiniteGroup::finish_construction() {
  order_ = static_cast<int>(table_.size());
  if (order_ == 0) throw InvalidParameterError("empty multiplication table");

  // Latin square
  for (int g = 0; g < order_; ++g) {
    if (static_cast<int>(table_[g].size()) != order_)
      throw InvalidParameterError("multiplication table is not square");
    std::vector<char> row(order_, 0), col(order_, 0);
    for (int h = 0; h < order_; ++h) {
      int p = table_[g][h], q = table_[h][g];
      if (p < 0 || p >= order_ || q < 0 || q >= order_)
        throw InvalidParameterError("table entry outside group");
      if (row[p]++ || col[q]++)
        throw InvalidParameterError("multiplication table is not a Latin square");
    }
  }

  // identity
  identity_ = -1;
  for (int e = 0; e < order_; ++e) {
    bool is_id = true;
    for (int g = 0; g < order_; ++g)
      if (table_[e][g] != g || table_[g][e] != g) {
        is_id = false;
        break;
      }
    if (is_id) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw InvalidParameterError("table has no identity element");

  // inverses
  inverses_.assign(order_, -1);
  for (int g = 0; g < order_; ++g) {
    for (int h = 0; h < order_; ++h)
      if (table_[g][h] == identity_ && table_[h][g] == identity_) {
        inverses_[g] = h;
        break;
      }
    if (inverses_[g] < 0)
      throw InvalidParameterError("table element has no inverse");
  }

  // associativity: exhaustive up to order 64, sampled above
  auto check_triple = [&](int a, int b, int c) {
    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
      throw InvalidParameterError("multiplication table is not associative");
  };
  if (order_ <= 64) {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c) check_triple(a, b, c);
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, order_ - 1);
    for (int i = 0; i < 50000; ++i) check_triple(pick(rng), pick(rng), pick(rng));
  }

  abelian_ = true;
  for (int g = 0; g < order_ && abelian_; ++g)
    for (int h = g + 1; h < order_; ++h)
      if (table_[g][h] != table_[h][g]) {
        abelian_ = false;
        break;
      }
}

FiniteGroup make_abelian(const std::vector<int>& factors) {
  if (factors.empty())
    throw InvalidParameterError("abelian group needs at least one factor");
  long long order = 1;
  for (int f : factors) {
    if (f < 2) throw InvalidParameterError("abelian factor must be >= 2");
    order *= f;
    if (order > 100000) throw InvalidParameterError("group order too large");
  }

  FiniteGroup g;
  g.kind_ = FiniteGroup::Kind::Abelian;
  g.factors_ = factors;
  const int n = static_cast<int>(order);

  auto decode = [&](int idx) {
    std::vector<int> v(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      v[i] = idx % factors[i];
      idx /= factors[i];
    }
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    int idx = 0;
    for (std::size_t i = factors.size(); i-- > 0;) idx = idx * factors[i] + v[i];
    return idx;
  };

  g.table_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    auto va = decode(a);
    for (int b = 0; b < n; ++b) {
      auto vb = decode(b);
      std::vector<int> vc(factors.size());
      for (std::size_t i = 0; i < factors.size(); ++i)
        vc[i] = (va[i] + vb[i]) % factors[i];
      g.table_[a][b] = encode(vc);
    }
  }

  g.names_.resize(n);
  for (int a = 0; a < n; ++a) {
    auto v = decode(a);
    if (factors.size() == 1) {
      g.names_[a] = std::to_string(v[0]);
    } else {
      std::ostringstream name;
      name << '(';
      for (std::size_t i = 0; i < v.size(); ++i)
        name << (i ? "," : "") << v[i];
      name << ')';
      g.names_[a] = name.str();
    }
  }

  std::ostringstream spec;
  for (std::size_t i = 0; i < factors.size(); ++i)
    spec << (i ? "x" : "") << 'Z' << factors[i];
  g.spec_ = spec.str();

  g.finish_construction();
  return g;
}

FiniteGroup make_semidirect(int n, int m, int t) {
  if (n < 2 || m < 2)
    throw InvalidParameterError("semidirect parameters must satisfy n, m >= 2");
  if (static_cast<long long>(n) * m > 100000)
    throw InvalidParameterError("group order too large");
  t %= n;
  if (t < 0) t += n;
  if (std::gcd(t, n) != 1 || mod_pow(t, m, n) != 1)
    throw InvalidParameterError(
        "semidirect action invalid: need gcd(t, n) = 1 and t^m = 1 (mod n)");

  FiniteGroup g;
  g.kind_ = FiniteGroup::Kind::Semidirect;
  g.sd_ = {n, m, t};
  const int order = n * m;

  // Elements (i, j) = x^i a^j at index i*m + j. From a^-1 x a = x^t we get
  // a^j x^i = x^(i * t^(m-j)) a^j, hence
  // (i1, j1) * (i2, j2) = (i1 + i2 * t^(m - j1) mod n, j1 + j2 mod m).
  g.table_.assign(order, std::vector<int>(order));
  for (int e1 = 0; e1 < order; ++e1) {
    int i1 = e1 / m, j1 = e1 % m;
    long long conj = mod_pow(t, m - j1, n);
    for (int e2 = 0; e2 < order; ++e2) {
      int i2 = e2 / m, j2 = e2 % m;
      int i = static_cast<int>((i1 + i2 * conj) % n);
      int j = (j1 + j2) % m;
      g.table_[e1][e2] = i * m + j;
    }
  }

  g.names_.resize(order);
  for (int e = 0; e < order; ++e) {
    int i = e / m, j = e % m;
    std::ostringstream name;
    if (i == 0 && j == 0) {
      name << 'e';
    } else {
      if (i == 1)
        name << 'x';
      else if (i > 1)
        name << "x^" << i;
      if (i > 0 && j > 0) name << ' ';
      if (j == 1)
        name << 'a';
      else if (j > 1)
        name << "a^" << j;
    }
    g.names_[e] = name.str();
  }

  std::ostringstream spec;
  spec << "SD(" << n << ',' << m << ',' << t << ')';
  g.spec_ = spec.str();

  g.finish_construction();
  return g;
}

FiniteGroup parse_group_spec(std::string_view spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (s.empty()) throw ParseError("empty group spec");

  auto parse_int = [](const std::string& text) {
    if (text.empty() ||
        !std::all_of(text.begin(), text.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("expected a positive integer in group spec");
    return std::stoi(text);
  };

  if (s.rfind("SD(", 0) == 0) {
    if (s.back() != ')') throw ParseError("unterminated SD(...) group spec");
    std::string inner = s.substr(3, s.size() - 4);
    std::vector<int> params;
    std::stringstream ss(inner);
    std::string piece;
    while (std::getline(ss, piece, ',')) params.push_back(parse_int(piece));
    if (params.size() != 3)
      throw ParseError("SD group spec needs exactly three parameters");
    return make_semidirect(params[0], params[1], params[2]);
  }

  // ZnxZm... form
  std::vector<int> factors;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'Z') throw ParseError("group spec factor must start with Z");
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    factors.push_back(parse_int(s.substr(start, pos - start)));
    if (pos < s.size()) {
      if (s[pos] != 'X') throw ParseError("expected 'x' between group factors");
      ++pos;
      if (pos == s.size()) throw ParseError("trailing 'x' in group spec");
    }
  }
  return make_abelian(factors);
}

} // namespace caystab
