#include "invbid/lp/problem.hpp"

#include <cmath>

#include "invbid/common.hpp"

namespace invbid::lp {

VarId Problem::add_variable(std::string name, double lower, double upper) {
    if (var_index_.count(name) != 0)
        throw ConfigError("duplicate variable name: " + name);
    if (std::isnan(lower) || std::isnan(upper) || lower > upper)
        throw ConfigError("empty bound interval for variable: " + name);
    VarId id = static_cast<VarId>(var_names_.size());
    var_index_.emplace(name, id);
    var_names_.push_back(std::move(name));
    lower_.push_back(lower);
    upper_.push_back(upper);
    obj_.push_back(0.0);
    return id;
}

void Problem::add_objective_term(VarId var, double coef) {
    if (!std::isfinite(coef))
        throw ConfigError("non-finite objective coefficient for " + var_names_.at(var));
    obj_.at(var) += coef;
}

RowId Problem::add_constraint(std::string name, std::vector<Term> terms, Relation rel,
                              double rhs) {
    if (row_index_.count(name) != 0)
        throw ConfigError("duplicate constraint name: " + name);
    if (!std::isfinite(rhs)) throw ConfigError("non-finite rhs in constraint " + name);
    for (const Term& t : terms) {
        if (t.var < 0 || t.var >= num_variables())
            throw ConfigError("undeclared variable in constraint " + name);
        if (!std::isfinite(t.coef))
            throw ConfigError("non-finite coefficient in constraint " + name);
    }
    RowId id = static_cast<RowId>(row_names_.size());
    row_index_.emplace(name, id);
    row_names_.push_back(std::move(name));
    rows_.push_back(std::move(terms));
    rel_.push_back(rel);
    rhs_.push_back(rhs);
    return id;
}

void Problem::validate() const {
    if (num_variables() == 0) throw ConfigError("LP has no variables");
    // Construction already enforces name uniqueness and finiteness; re-check
    // bounds so a default-constructed-then-mutated problem cannot slip through.
    for (VarId v = 0; v < num_variables(); ++v) {
        if (lower_[v] > upper_[v])
            throw ConfigError("empty bound interval for variable: " + var_names_[v]);
    }
}

} // namespace invbid::lp
