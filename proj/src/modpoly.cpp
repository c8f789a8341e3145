#include "sshecke/modpoly.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace sshecke {

namespace {

// Integer coefficients of the classical modular polynomials, a >= b entries
// only. Each line is already in the database text format.
const char* const kPhi2 =
    "[3,0] 1\n"
    "[2,2] -1\n"
    "[2,1] 1488\n"
    "[2,0] -162000\n"
    "[1,1] 40773375\n"
    "[1,0] 8748000000\n"
    "[0,0] -157464000000000\n";

const char* const kPhi3 =
    "[4,0] 1\n"
    "[3,3] -1\n"
    "[3,2] 2232\n"
    "[3,1] -1069956\n"
    "[3,0] 36864000\n"
    "[2,2] 2587918086\n"
    "[2,1] 8900222976000\n"
    "[2,0] 452984832000000\n"
    "[1,1] -770845966336000000\n"
    "[1,0] 1855425871872000000000\n";

[[noreturn]] void parse_fail(const std::string& origin, std::size_t line,
                             const std::string& what) {
  throw ParseError(origin + " line " + std::to_string(line) + ": " + what);
}

}  // namespace

u64 PhiPoly::coeff(u64 a, u64 b) const {
  if (a < b) std::swap(a, b);
  auto it = coeffs.find(a * (ell + 2) + b);
  return it == coeffs.end() ? 0 : it->second;
}

void PhiPoly::set(u64 a, u64 b, u64 v) {
  if (a < b) std::swap(a, b);
  if (v == 0) return;
  coeffs[a * (ell + 2) + b] = v;
}

u64 reduce_decimal_mod(const std::string& digits, bool negative, u64 p) {
  if (digits.empty()) throw ParseError("empty decimal literal");
  u64 r = 0;
  for (char ch : digits) {
    if (ch < '0' || ch > '9')
      throw ParseError(std::string("non-digit '") + ch + "' in decimal literal");
    r = (r * 10 + u64(ch - '0')) % p;
  }
  if (negative && r != 0) r = p - r;
  return r;
}

PhiPoly parse_phi_stream(std::istream& in, u64 ell, u64 p,
                         const std::string& origin) {
  if (ell < 2 || !is_prime(ell))
    throw InvalidArgument("ell must be prime (got " + std::to_string(ell) + ")");
  if (p < 2) throw InvalidArgument("p must be at least 2");
  PhiPoly phi;
  phi.ell = ell;
  phi.p = p;
  std::map<u64, bool> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t pos = 0;
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) continue;
    if (line[pos] == '#') continue;
    if (line[pos] != '[') parse_fail(origin, lineno, "expected '[' to open an entry");
    ++pos;
    auto read_nat = [&](const char* what) -> u64 {
      std::size_t start = pos;
      u64 v = 0;
      while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') {
        v = v * 10 + u64(line[pos] - '0');
        if (v > ell + 1)
          parse_fail(origin, lineno,
                     std::string(what) + " exceeds ell+1 = " + std::to_string(ell + 1));
        ++pos;
      }
      if (pos == start) parse_fail(origin, lineno, std::string("missing ") + what);
      return v;
    };
    u64 a = read_nat("X-exponent");
    if (pos >= line.size() || line[pos] != ',')
      parse_fail(origin, lineno, "expected ',' between exponents");
    ++pos;
    u64 b = read_nat("Y-exponent");
    if (pos >= line.size() || line[pos] != ']')
      parse_fail(origin, lineno, "expected ']' to close the exponent pair");
    ++pos;
    if (pos >= line.size() || (line[pos] != ' ' && line[pos] != '\t'))
      parse_fail(origin, lineno, "expected whitespace before the coefficient");
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    bool negative = false;
    if (pos < line.size() && (line[pos] == '-' || line[pos] == '+')) {
      negative = line[pos] == '-';
      ++pos;
    }
    std::size_t dstart = pos;
    while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') ++pos;
    if (pos == dstart) parse_fail(origin, lineno, "missing coefficient digits");
    std::string digits = line.substr(dstart, pos - dstart);
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos != line.size())
      parse_fail(origin, lineno, "trailing characters after the coefficient");
    if (a < b)
      parse_fail(origin, lineno, "entries must satisfy a >= b (symmetry is implied)");
    u64 key = a * (ell + 2) + b;
    if (seen.count(key)) parse_fail(origin, lineno, "duplicate exponent pair");
    seen[key] = true;
    phi.set(a, b, reduce_decimal_mod(digits, negative, p));
  }
  if (phi.coeff(ell + 1, 0) != 1)
    throw ParseError(origin + ": validation failed: X^" + std::to_string(ell + 1) +
                     " coefficient must reduce to 1 (monic)");
  for (u64 b = 1; b <= ell + 1; ++b) {
    if (phi.coeff(ell + 1, b) != 0)
      throw ParseError(origin +
                       ": validation failed: coefficient at [" +
                       std::to_string(ell + 1) + "," + std::to_string(b) +
                       "] must vanish");
  }
  return phi;
}

PhiPoly parse_phi_file(const std::string& path, u64 ell, u64 p) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open modular polynomial database: " + path);
  return parse_phi_stream(in, ell, p, path);
}

std::string serialize_phi(const PhiPoly& phi) {
  // Entries high to low so the monic leading term comes first.
  std::ostringstream out;
  for (auto it = phi.coeffs.rbegin(); it != phi.coeffs.rend(); ++it) {
    u64 a = it->first / (phi.ell + 2);
    u64 b = it->first % (phi.ell + 2);
    out << "[" << a << "," << b << "] " << it->second << "\n";
  }
  return out.str();
}

bool builtin_phi_available(u64 ell) { return ell == 2 || ell == 3; }

PhiPoly builtin_phi(u64 ell, u64 p) {
  const char* text = nullptr;
  if (ell == 2) text = kPhi2;
  if (ell == 3) text = kPhi3;
  if (!text)
    throw InvalidArgument("no built-in modular polynomial for ell = " +
                          std::to_string(ell));
  std::istringstream in(text);
  return parse_phi_stream(in, ell, p, "builtin phi_" + std::to_string(ell));
}

PolyFq phi_row(const PhiPoly& phi, const Fq& j) {
  const FieldCtx& K = j.ctx();
  if (K.p() != phi.p) throw MathError("phi table and element disagree on p");
  std::vector<Fq> jp;  // j^0 .. j^(ell+1)
  jp.reserve(phi.ell + 2);
  jp.push_back(Fq::one(K));
  for (u64 i = 1; i <= phi.ell + 1; ++i) jp.push_back(jp.back() * j);
  std::vector<Fq> row(phi.ell + 2, Fq::zero(K));
  for (const auto& [key, v] : phi.coeffs) {
    u64 a = key / (phi.ell + 2);
    u64 b = key % (phi.ell + 2);
    Fq c = Fq::from_int(K, i64(v));
    row[b] = row[b] + c * jp[a];
    if (a != b) row[a] = row[a] + c * jp[b];
  }
  return PolyFq::from_coeffs(K, std::move(row));
}

bool kronecker_congruence_holds(u64 ell) {
  if (!builtin_phi_available(ell)) return false;
  PhiPoly got = builtin_phi(ell, ell);
  PhiPoly want;
  want.ell = ell;
  want.p = ell;
  // (X^ell - Y)(X - Y^ell) = X^(ell+1) - (XY)^ell - XY + Y^(ell+1)
  want.set(ell + 1, 0, 1);
  want.set(ell, ell, ell - 1);
  want.set(1, 1, ell - 1);
  return got == want;
}

void PhiSource::register_file(u64 ell, std::string path) {
  if (!is_prime(ell))
    throw InvalidArgument("phi databases are indexed by prime ell (got " +
                          std::to_string(ell) + ")");
  std::lock_guard<std::mutex> lock(mu_);
  files_[ell] = std::move(path);
  cache_.erase(ell);
}

bool PhiSource::available(u64 ell) const {
  if (!is_prime(ell)) return false;
  std::lock_guard<std::mutex> lock(mu_);
  return files_.count(ell) || builtin_phi_available(ell);
}

const PhiPoly& PhiSource::get(u64 ell) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(ell);
  if (it != cache_.end()) return *it->second;
  std::unique_ptr<PhiPoly> phi;
  auto fit = files_.find(ell);
  if (fit != files_.end()) {
    phi = std::make_unique<PhiPoly>(parse_phi_file(fit->second, ell, p_));
  } else if (builtin_phi_available(ell)) {
    phi = std::make_unique<PhiPoly>(builtin_phi(ell, p_));
  } else {
    throw DataError("modular polynomial database required for ell = " +
                    std::to_string(ell));
  }
  const PhiPoly& ref = *phi;
  cache_[ell] = std::move(phi);
  return ref;
}

}  // namespace sshecke
