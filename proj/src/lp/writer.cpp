#include <cmath>
#include <fstream>
#include <sstream>

#include "invbid/common.hpp"
#include "invbid/lp/solve.hpp"

namespace invbid::lp {

namespace {

// LP-format identifiers must not start with a digit or contain operators;
// mangle anything suspicious.
std::string sanitize(const std::string& name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '.';
        out.push_back(ok ? c : '_');
    }
    if (out.empty() || (out[0] >= '0' && out[0] <= '9')) out.insert(out.begin(), 'v');
    return out;
}

void append_terms(std::ostringstream& os, const std::vector<Term>& terms,
                  const Problem& p) {
    bool first = true;
    for (const Term& t : terms) {
        if (t.coef == 0.0) continue;
        if (first) {
            os << (t.coef < 0 ? "- " : "");
        } else {
            os << (t.coef < 0 ? " - " : " + ");
        }
        os << std::fabs(t.coef) << " " << sanitize(p.variable_name(t.var));
        first = false;
    }
    if (first) os << "0 " << sanitize(p.variable_name(0));
}

} // namespace

std::string to_lp_format(const Problem& p) {
    std::ostringstream os;
    os.precision(17);
    os << (p.sense() == Sense::maximize ? "Maximize" : "Minimize") << "\n obj: ";
    std::vector<Term> obj;
    for (VarId v = 0; v < p.num_variables(); ++v)
        if (p.objective_coef(v) != 0.0) obj.push_back({v, p.objective_coef(v)});
    append_terms(os, obj, p);
    os << "\nSubject To\n";
    for (RowId r = 0; r < p.num_constraints(); ++r) {
        os << " " << sanitize(p.constraint_name(r)) << ": ";
        append_terms(os, p.row_terms(r), p);
        switch (p.row_relation(r)) {
            case Relation::le: os << " <= "; break;
            case Relation::ge: os << " >= "; break;
            case Relation::eq: os << " = "; break;
        }
        os << p.row_rhs(r) << "\n";
    }
    os << "Bounds\n";
    for (VarId v = 0; v < p.num_variables(); ++v) {
        const double l = p.lower(v), u = p.upper(v);
        const std::string name = sanitize(p.variable_name(v));
        if (!std::isfinite(l) && !std::isfinite(u)) {
            os << " " << name << " free\n";
        } else if (!std::isfinite(u)) {
            os << " " << name << " >= " << l << "\n";
        } else if (!std::isfinite(l)) {
            os << " " << name << " <= " << u << "\n";
        } else {
            os << " " << l << " <= " << name << " <= " << u << "\n";
        }
    }
    os << "End\n";
    return os.str();
}

void write_lp_format(const Problem& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open for writing: " + path);
    out << to_lp_format(p);
}

} // namespace invbid::lp
