#pragma once

#include <string>
#include <vector>

#include "e6char/fourier.hpp"
#include "e6char/hecke.hpp"
#include "e6char/scalars.hpp"
#include "e6char/weyl.hpp"

namespace e6char {

// one slot of the 30-element parameter set of unipotent characters
struct RosterEntry {
  std::string label;   // display label (reflection-character or series name)
  std::string source;  // "irrW" | "cuspidal" | "other"
  std::string family;  // "s3" for the eight-slot family, "-" otherwise
  std::string mpair;   // pair name inside the family parameter set, or "-"
  int delta = 1;       // attached sign; fixed to +1 throughout

  bool in_family() const { return family == "s3"; }
};

struct Roster {
  std::string case_name;  // "e6" or "2e6"
  std::vector<RosterEntry> entries;

  int index_of(const std::string& label) const;  // -1 when absent
  static Roster load(const std::string& path);
  void save(const std::string& path) const;
};

// cross-checks cardinalities, label resolution against the character table,
// family slot coverage, and the pairing-coefficient sign pattern against the
// computed Fourier matrix of the eight-slot family
void validate_roster(const Roster& roster, const LabeledCharacters& lc,
                     const FourierMatrix& fm, bool twisted);

// {x_rho, x_1} + {x_rho, x_2}: sum of the two cuspidal-column entries of the
// family Fourier matrix in the row of the given slot; zero off the family
Rational cuspidal_pair_coefficient(const RosterEntry& e, const FourierMatrix& fm);

// value at the distinguished regular unipotent element, linear in the
// undetermined sign: 1 for the trivial-character slot plus
// xi * q^3 * (cuspidal pair coefficient)
SignLinear rho_at_u0(const RosterEntry& e, const FourierMatrix& fm);

// values of the two cuspidal characteristic functions on the three regular
// unipotent classes (and zero off the regular orbit)
struct CuspidalFunctionTable {
  std::vector<std::string> class_names;  // off_regular, u0, u0p, u0pp
  std::vector<Cyc3Poly> chi1;
  std::vector<Cyc3Poly> chi2;

  static CuspidalFunctionTable build();
  // Gram matrix with centralizer order 3 q^6 on each regular class equals
  // the identity
  bool orthonormal() const;
};

// fixed-point-count combination: sum over the principal-series slots of
// rho(u0) times the trace of the distinguished basis element
SignLinear m_value(const Roster& roster, const FourierMatrix& fm,
                   const HeckeData& data);

struct DerivationStep {
  std::string name;
  bool passed = false;
  std::string details;
};

// replays the constraints pinning the scalar to a sign: the regular element
// is conjugate to its inverse, the two cuspidal columns of the Fourier
// matrix agree off the cuspidal block, and complex conjugation swaps the two
// cuspidal characters (imported fact); conclusion: one common sign in {+1,-1}
std::vector<DerivationStep> scalar_constraints(const FourierMatrix& fm,
                                               bool witness_verified);

struct ScalarSolution {
  int xi = 0;  // 0 until determined
  bool ok = false;
  SignLinear m;  // the combination at the distinguished element
  std::vector<DerivationStep> log;
};

// pins the sign by non-negativity of the fixed-point count at the sample
// points, guarded by the closed-form identity m = q^6 + xi * 2 q^6
ScalarSolution determine_xi(const Roster& roster, const FourierMatrix& fm,
                            const HeckeData& data, bool witness_verified,
                            const std::vector<long>& q_samples);

struct ValueRow {
  std::string label;
  LaurentPoly value;
};

// the 30 values at the distinguished regular unipotent element; every value
// specializes to a rational integer at q = 3
std::vector<ValueRow> value_table(const Roster& roster, const FourierMatrix& fm,
                                  int xi);

}  // namespace e6char
