#pragma once

#include <string>
#include <vector>

#include "cubforge/rule.hpp"

namespace cubforge {

// Integer Waring-type identity
//   M (x_1^2 + ... + x_n^2)^t = sum_i c_i * sum_{orbit}(<g_i, x>)^{2t},
// where each orbit ranges over the distinct permutations of the coefficient
// pattern and sign flips modulo global sign (even power).
struct SymmetricIdentity {
    Integer multiplier;  // M
    int variables = 0;   // n
    int power = 0;       // 2t
    struct Term {
        Integer coefficient;
        std::vector<int> pattern;  // weakly decreasing, nonnegative
    };
    std::vector<Term> terms;

    // number of linear forms on the right-hand side
    Integer form_count() const;
    std::string str() const;
};

struct IdentityCheckResult {
    bool pass = false;
    std::string witness;  // first differing monomial with both coefficients
    std::string summary() const;
};

// Expands both sides exactly and compares coefficient by coefficient.
IdentityCheckResult identity_check(const SymmetricIdentity& identity);

// Clears denominators of a positive index-2t sphere rule with rational
// squared coordinates into an integer identity with minimal M for the
// produced (primitive) patterns. Throws std::domain_error when a node is
// not proportional to an integer vector (irrational data).
SymmetricIdentity rule_to_identity(const CubatureRule& rule);

// --- text format ---
// header: "M variables power", then one term per line: "coeff : c1 c2 ...".
SymmetricIdentity identity_from_text(const std::string& text);
std::string identity_to_text(const SymmetricIdentity& identity);
SymmetricIdentity load_identity(const std::string& path);
void save_identity(const SymmetricIdentity& identity, const std::string& path);

// Built-in classical identities: "hurwitz" (4 vars, 8th powers, M = 5040),
// "schur" (10th powers, M = 22680), "schur-doubled" (the variant with the
// mixed-form orbit listed twice), "sos315" (M = 315*2^8), "sos161280" and
// the variant "sos161280-alt" with 28561 on the last orbit.
SymmetricIdentity builtin_identity(const std::string& name);
std::vector<std::string> builtin_identity_names();

}  // namespace cubforge
