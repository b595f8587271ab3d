#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperlab/expr.hpp"
#include "hyperlab/integral.hpp"
#include "hyperlab/pfq.hpp"
#include "hyperlab/types.hpp"

namespace hyperlab {

// A pFq-series template: parameter slots are rational-function expressions
// in the entry's free parameters.
struct SeriesTpl {
    std::vector<Expr> upper;
    std::vector<Expr> lower;
    Expr argument = Expr(1);
};

// One right-hand-side term: coefficient (rational function, optionally
// times an exactly reducible gamma ratio) applied to a series.
struct RhsTerm {
    Expr coef = Expr(1);
    std::optional<GammaTerm> gamma_coef;
    SeriesTpl series;
};

// Closed-form remainder: polynomial factor times a gamma ratio that
// reduces to an exact rational under the entry's integer restriction.
struct Remainder {
    Expr poly = Expr(1);
    GammaTerm gammas;
};

struct IdentityEntry {
    std::string id;
    std::vector<std::string> free_params;
    SeriesTpl lhs;
    std::vector<RhsTerm> rhs;
    std::optional<Remainder> remainder;
    // Parameters that must be integral so every gamma ratio reduces to an
    // exact Pochhammer product.
    std::vector<std::string> integer_params;
};

// The full fixed catalogue of two-term (and remainder-term) relations.
const std::vector<IdentityEntry>& catalogue();

// DomainError when no entry has this id.
const IdentityEntry& find_identity(const std::string& id);

enum class Verdict { kPass, kFail, kExplained };

std::string to_string(Verdict v);

struct VerificationReport {
    std::string id;
    Assignment assignment;
    std::string mode;  // "exact" or "numeric"
    std::string lhs_value;
    std::string rhs_value;
    Verdict verdict = Verdict::kFail;
    Rational slack;                      // 0 in exact mode, |difference| in numeric mode
    std::optional<Rational> prefactor;   // first rhs coefficient at the instance
    bool passed() const { return verdict == Verdict::kPass; }
};

// One line: VERIFY <id> <assignment> <mode> <verdict> <slack>
std::string render(const VerificationReport& report);

// Exact componentwise verification in the zeta(2)-ring.
// InadmissibleInstance when some series is not integral-evaluable.
VerificationReport verify_exact(const std::string& id, const Assignment& assignment);

// Enclosure-based verification; passes when |lhs - rhs| is within the
// combined error bounds. Gamma factors still reduce exactly.
VerificationReport verify_numeric(const std::string& id, const Assignment& assignment,
                                  unsigned precision_bits, unsigned long max_terms = 4000);

// Six classical counter-example relations: exact values and cross-equality
// (with the 9x factor in the fifth one).
std::vector<VerificationReport> sato_suite();

struct CounterexamplePair {
    IntegralParams lhs;
    IntegralParams rhs;
    Rational factor;
    std::string family;  // "A", "B" or "sato-n"
};

// I(2a-1,2a-1,a,2a-1,a) = I(2a+1,2a-1,a,2a,a-1), a >= 1.
CounterexamplePair family_A(long alpha);

// I(a^2-1,a-1,a^2-a+1,a-1,0) = (a-1) I(a^2-1,a,a^2-a-1,a,0), a >= 2.
CounterexamplePair family_B(long alpha);

// Checks exact equality with the factor and that the pair escapes both
// symmetry groups. Equality without escape yields Verdict::kExplained.
VerificationReport verify_family(const CounterexamplePair& pair);

}  // namespace hyperlab
