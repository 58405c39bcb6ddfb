#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

namespace invbid::lp {

using VarId = std::int32_t;
using RowId = std::int32_t;

enum class Sense { minimize, maximize };
enum class Relation { le, eq, ge };

struct Term {
    VarId var;
    double coef;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Linear program with named variables and constraints.
//
// Dual sign convention (fixed here, relied on by every caller):
// with s_i = +1 for <= and = rows and s_i = -1 for >= rows,
//   minimize:  c_j + sum_i s_i a_ij y_i = rc_j
//   maximize:  d_j = sum_i s_i a_ij y_i - rc_j
// where y_i >= 0 for inequality rows (free for equalities) and the reduced
// cost rc_j is >= 0 when x_j sits at its lower bound, <= 0 at its upper
// bound, and ~0 in the interior. Under this convention the multipliers of a
// welfare-maximization problem are exactly the nonnegative lambda/psi specific
// to its KKT system, with rc supplying the duals of x >= 0 bounds.
class Problem {
public:
    VarId add_variable(std::string name, double lower = -kInf, double upper = kInf);

    void set_sense(Sense sense) { sense_ = sense; }
    Sense sense() const { return sense_; }
    // Accumulates onto the variable's objective coefficient.
    void add_objective_term(VarId var, double coef);

    RowId add_constraint(std::string name, std::vector<Term> terms, Relation rel,
                         double rhs);

    int num_variables() const { return static_cast<int>(var_names_.size()); }
    int num_constraints() const { return static_cast<int>(row_names_.size()); }

    const std::string& variable_name(VarId v) const { return var_names_[v]; }
    const std::string& constraint_name(RowId r) const { return row_names_[r]; }
    double lower(VarId v) const { return lower_[v]; }
    double upper(VarId v) const { return upper_[v]; }
    double objective_coef(VarId v) const { return obj_[v]; }
    const std::vector<Term>& row_terms(RowId r) const { return rows_[r]; }
    Relation row_relation(RowId r) const { return rel_[r]; }
    double row_rhs(RowId r) const { return rhs_[r]; }

    // Throws ConfigError on duplicate names, non-finite data, or empty bounds.
    void validate() const;

private:
    Sense sense_ = Sense::minimize;
    std::vector<std::string> var_names_;
    std::vector<double> lower_, upper_, obj_;
    std::vector<std::string> row_names_;
    std::vector<std::vector<Term>> rows_;
    std::vector<Relation> rel_;
    std::vector<double> rhs_;
    std::unordered_map<std::string, VarId> var_index_;
    std::unordered_map<std::string, RowId> row_index_;
};

} // namespace invbid::lp
