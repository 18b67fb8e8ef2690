#include "problem.hpp"

#include <sstream>

namespace duality {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

int require_var(const RingPtr& ring, const std::string& name) {
    int v = ring->var_index(trim(name));
    if (v < 0) throw ParseError("unknown variable '" + trim(name) + "'");
    return v;
}

} // namespace

PolyMatrix Problem::presentation() const {
    if (module) return *module;
    if (ideal.empty()) throw ParseError("problem has no ideal or module section");
    PolyMatrix m(ring, 1, static_cast<int>(ideal.size()));
    for (int c = 0; c < m.cols(); ++c) m.at(0, c) = ideal[c];
    return m;
}

const std::vector<Polynomial>& Problem::ideal_generators() const {
    if (ideal.empty()) throw ParseError("problem has no ideal section");
    return ideal;
}

VariableSplit parse_split(const RingPtr& ring, const std::string& body) {
    // "free=x,y dependent=z,w" (either part optional but at least one
    // dependent variable must result).
    VariableSplit split;
    split.dependent.assign(ring->nvars(), 0);
    std::vector<char> seen(ring->nvars(), 0);
    std::istringstream in(body);
    std::string tok;
    bool have_dep = false;
    while (in >> tok) {
        size_t eq = tok.find('=');
        if (eq == std::string::npos)
            throw ParseError("split expects free=... dependent=...");
        std::string key = tok.substr(0, eq);
        bool dep;
        if (key == "dependent")
            dep = true;
        else if (key == "free")
            dep = false;
        else
            throw ParseError("split expects free=... dependent=...");
        for (auto& name : split_on(tok.substr(eq + 1), ',')) {
            if (name.empty()) continue;
            int v = require_var(ring, name);
            if (seen[v]) throw ParseError("variable '" + name + "' listed twice in split");
            seen[v] = 1;
            split.dependent[v] = dep ? 1 : 0;
            have_dep = have_dep || dep;
        }
        if (dep) have_dep = true;
    }
    for (int v = 0; v < ring->nvars(); ++v)
        if (!seen[v]) throw ParseError("split does not mention variable '" + ring->vars[v] + "'");
    if (!have_dep) throw ParseError("split has no dependent variables");
    return split;
}

RationalSection parse_section(const RingPtr& ring, const std::string& body) {
    // "y = x^2, w = x + 1": one assignment per dependent variable.
    RationalSection section;
    for (auto& part : split_on(body, ',')) {
        if (part.empty()) continue;
        size_t eq = part.find('=');
        if (eq == std::string::npos)
            throw ParseError("section expects comma-separated 'var = polynomial'");
        int v = require_var(ring, part.substr(0, eq));
        if (section.graph.count(v))
            throw ParseError("section assigns '" + ring->vars[v] + "' twice");
        section.graph[v] = parse_polynomial(ring, part.substr(eq + 1));
    }
    if (section.graph.empty()) throw ParseError("section is empty");
    return section;
}

Problem parse_problem(const std::string& text) {
    Problem prob;
    prob.raw_text = text;

    std::istringstream in(text);
    std::string line;
    std::string pending_split, pending_section;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.rfind("ring", 0) == 0 &&
            (line.size() == 4 || line[4] == ' ' || line[4] == '\t')) {
            if (prob.ring) throw ParseError("duplicate ring declaration");
            std::vector<std::string> vars;
            for (auto& name : split_on(line.substr(4), ',')) {
                if (name.empty()) throw ParseError("empty variable name in ring declaration");
                vars.push_back(name);
            }
            if (vars.empty()) throw ParseError("ring declaration lists no variables");
            prob.ring = make_ring(std::move(vars));
            continue;
        }

        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("cannot parse line: " + line);
        std::string key = trim(line.substr(0, colon));
        std::string body = trim(line.substr(colon + 1));
        if (!prob.ring) throw ParseError("'" + key + "' before ring declaration");

        if (key == "ideal") {
            if (!prob.ideal.empty()) throw ParseError("duplicate ideal section");
            for (auto& g : split_on(body, ','))
                prob.ideal.push_back(parse_polynomial(prob.ring, g));
        } else if (key == "module") {
            if (prob.module) throw ParseError("duplicate module section");
            // columns separated by ';', components by ','
            std::vector<std::vector<Polynomial>> cols;
            for (auto& col : split_on(body, ';')) {
                std::vector<Polynomial> v;
                for (auto& entry : split_on(col, ','))
                    v.push_back(parse_polynomial(prob.ring, entry));
                if (!cols.empty() && v.size() != cols[0].size())
                    throw ParseError("module columns have mismatched lengths");
                cols.push_back(std::move(v));
            }
            PolyMatrix m(prob.ring, static_cast<int>(cols[0].size()),
                         static_cast<int>(cols.size()));
            for (int c = 0; c < m.cols(); ++c) m.set_column(c, cols[c]);
            prob.module = std::move(m);
        } else if (key == "matrix") {
            // rows separated by ';', entries by ','
            std::vector<std::vector<Polynomial>> rows;
            for (auto& row : split_on(body, ';')) {
                std::vector<Polynomial> v;
                for (auto& entry : split_on(row, ','))
                    v.push_back(parse_polynomial(prob.ring, entry));
                if (!rows.empty() && v.size() != rows[0].size())
                    throw ParseError("matrix rows have mismatched lengths");
                rows.push_back(std::move(v));
            }
            PolyMatrix m(prob.ring, static_cast<int>(rows.size()),
                         static_cast<int>(rows[0].size()));
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
            if (!prob.complex_matrices.empty() &&
                prob.complex_matrices.back().cols() != m.rows())
                throw ParseError("matrix sizes do not chain into a complex");
            prob.complex_matrices.push_back(std::move(m));
        } else if (key == "split") {
            if (!pending_split.empty()) throw ParseError("duplicate split section");
            pending_split = body;
        } else if (key == "section") {
            if (!pending_section.empty()) throw ParseError("duplicate section line");
            pending_section = body;
        } else {
            throw ParseError("unknown section '" + key + "'");
        }
    }

    if (!prob.ring) throw ParseError("missing ring declaration");
    if (!pending_split.empty()) prob.split = parse_split(prob.ring, pending_split);
    if (!pending_section.empty()) prob.section = parse_section(prob.ring, pending_section);
    if (prob.section && !prob.split)
        throw ParseError("section given without a split");
    return prob;
}

} // namespace duality
