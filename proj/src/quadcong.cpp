#include "residue/quadcong.hpp"

#include <istream>
#include <sstream>
#include <string>

#include "residue/detail/arith.hpp"

namespace residue {

QCInstance::QCInstance(Natural a, Natural b, Natural c) : b_(std::move(b)), c_(std::move(c)) {
  if (b_ < Natural(2)) throw DomainError("QCInstance: modulus b must be at least 2, got " + b_.str());
  if (c_.is_zero()) throw DomainError("QCInstance: bound c must be at least 1");
  a_ = a % b_;
}

bool verify_certificate(const QCInstance& inst, const Natural& x) {
  if (x.is_zero() || x >= inst.c()) return false;
  return (x * x) % inst.b() == inst.a();
}

QCVerdict decide(const QCInstance& inst) {
  if (!is_prime(inst.b())) return brute_force(inst).verdict;

  const Prime p(inst.b());
  const auto roots = sqrt_mod_prime(inst.a(), p);
  if (!roots) return QCVerdict::unsat();
  if (inst.a().is_zero()) {
    // Only multiples of p square to zero; the least positive one is p.
    return p.value() < inst.c() ? QCVerdict::sat(p.value()) : QCVerdict::unsat();
  }
  if (roots->lo < inst.c()) return QCVerdict::sat(roots->lo);
  if (roots->hi < inst.c()) return QCVerdict::sat(roots->hi);
  return QCVerdict::unsat();
}

BruteForceResult brute_force(const QCInstance& inst) {
  BruteForceResult out;
  const bool probe_zero_class = inst.a().is_zero() && inst.b() < inst.c();

  if (inst.b().fits_u64()) {
    const std::uint64_t b = inst.b().to_u64();
    const std::uint64_t a = inst.a().to_u64();
    const std::uint64_t end = inst.c() < inst.b() ? inst.c().to_u64() : b;
    for (std::uint64_t x = 1; x < end; ++x) {
      ++out.visited;
      if (detail::mul_mod(x, x, b) == a) {
        out.verdict = QCVerdict::sat(x);
        return out;
      }
    }
  } else {
    const Natural end = inst.c() < inst.b() ? inst.c() : inst.b();
    for (Natural x(1); x < end; x += Natural(1)) {
      ++out.visited;
      if ((x * x) % inst.b() == inst.a()) {
        out.verdict = QCVerdict::sat(x);
        return out;
      }
    }
  }

  if (probe_zero_class) {
    ++out.visited;
    out.verdict = QCVerdict::sat(inst.b());
  }
  return out;
}

QCVerdict solve_wilson_instance(const Prime4m1& p) {
  const Natural w = wilson_sqrt_minus_one(p);
  const Natural other = p.value() - w;
  return QCVerdict::sat(other < w ? other : w);
}

std::vector<QCInstance> read_instances(std::istream& in) {
  std::vector<QCInstance> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string a, b, c, extra;
    if (!(fields >> a >> b >> c) || (fields >> extra)) {
      throw DomainError("line " + std::to_string(line_no) + ": expected three fields 'a b c'");
    }
    try {
      out.emplace_back(Natural::parse(a), Natural::parse(b), Natural::parse(c));
    } catch (const DomainError& e) {
      throw DomainError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace residue
