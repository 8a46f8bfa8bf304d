#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "residue/modmath.hpp"
#include "residue/natural.hpp"

namespace residue {

/// Decision instance "is there 0 < x < c with x^2 = a (mod b)?".
/// `a` is reduced modulo `b` on construction.
class QCInstance {
 public:
  /// Throws DomainError unless b >= 2 and c >= 1.
  QCInstance(Natural a, Natural b, Natural c);

  const Natural& a() const { return a_; }
  const Natural& b() const { return b_; }
  const Natural& c() const { return c_; }

  friend bool operator==(const QCInstance&, const QCInstance&) = default;

 private:
  Natural a_;
  Natural b_;
  Natural c_;
};

/// Answer to a QCInstance. A witness is present exactly when satisfiable.
struct QCVerdict {
  std::optional<Natural> witness;

  bool satisfiable() const { return witness.has_value(); }
  static QCVerdict unsat() { return {}; }
  static QCVerdict sat(Natural x) { return {std::move(x)}; }
  friend bool operator==(const QCVerdict&, const QCVerdict&) = default;
};

struct BruteForceResult {
  QCVerdict verdict;
  std::uint64_t visited = 0;  ///< candidates tested, in scan order
};

/// The NP verifier: 0 < x < c and x^2 mod b == a.
bool verify_certificate(const QCInstance& inst, const Natural& x);

/// Smallest witness, or unsatisfiable. Prime moduli go through
/// sqrt_mod_prime; composite moduli fall back to brute_force.
QCVerdict decide(const QCInstance& inst);

/// Ascending scan x = 1, 2, ..., min(c, b) - 1, stopping at the first
/// witness. Squares repeat with period b, so this covers every class except
/// x = 0 (mod b); that class is probed once more at x = b when a = 0 and
/// b < c, since b^2 = 0 (mod b) can only match a = 0.
BruteForceResult brute_force(const QCInstance& inst);

/// Solves (p - 1, p, p) from the half factorial: witness min(w, p - w)
/// with w = ((p - 1) / 2)! mod p.
QCVerdict solve_wilson_instance(const Prime4m1& p);

/// Reads the instance text format: one `a b c` triple per line, decimal,
/// whitespace separated. Blank lines and lines starting with '#' are
/// skipped. Throws DomainError naming the offending line.
std::vector<QCInstance> read_instances(std::istream& in);

}  // namespace residue
