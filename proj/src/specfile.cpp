#include "qha/specfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qha {

namespace {

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw std::runtime_error(origin + ":" + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Token {
    enum Kind { Ident, Int, Plus, Minus, Star } kind;
    std::string text;
    i64 value = 0;
};

std::vector<Token> lex_expr(const std::string& s, const std::string& origin, int line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ' || c == '\t') {
            ++i;
        } else if (c == '+') {
            out.push_back({Token::Plus, "+"});
            ++i;
        } else if (c == '-') {
            out.push_back({Token::Minus, "-"});
            ++i;
        } else if (c == '*') {
            out.push_back({Token::Star, "*"});
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Int, s.substr(i, j - i), std::stoll(s.substr(i, j - i))});
            i = j;
        } else if (is_ident_start(c)) {
            size_t j = i;
            while (j < s.size() && is_ident_char(s[j])) ++j;
            out.push_back({Token::Ident, s.substr(i, j - i)});
            i = j;
        } else {
            fail(origin, line, std::string("unexpected character '") + c + "' in expression");
        }
    }
    return out;
}

/// Path-expression grammar: expr = ['-'] term (('+'|'-') term)*;
/// term = factor ('*' factor)*; factor = integer | arrow name.
/// "a*b" composes right to left: b is applied first.
Relation parse_relation(const std::string& s, const Quiver& q, const std::string& origin,
                        int line) {
    std::vector<Token> toks = lex_expr(s, origin, line);
    if (toks.empty()) fail(origin, line, "empty relation");
    Relation rel;
    size_t i = 0;
    i64 sign = 1;
    if (toks[i].kind == Token::Minus) {
        sign = -1;
        ++i;
    } else if (toks[i].kind == Token::Plus) {
        ++i;
    }
    while (true) {
        // one term
        i64 coeff = sign;
        std::vector<std::string> idents;  // syntax order, leftmost applied last
        bool expect_factor = true;
        while (i < toks.size()) {
            const Token& t = toks[i];
            if (expect_factor) {
                if (t.kind == Token::Int) {
                    coeff *= t.value;
                } else if (t.kind == Token::Ident) {
                    idents.push_back(t.text);
                } else {
                    fail(origin, line, "expected arrow name or integer, got '" + t.text + "'");
                }
                expect_factor = false;
                ++i;
            } else if (t.kind == Token::Star) {
                expect_factor = true;
                ++i;
            } else {
                break;  // end of term
            }
        }
        if (expect_factor) fail(origin, line, "dangling '*' in expression");
        if (idents.empty()) fail(origin, line, "relation term has no arrows");
        Path p;
        p.arrows.reserve(idents.size());
        for (auto it = idents.rbegin(); it != idents.rend(); ++it) {
            int a = q.arrow_index(*it);
            if (a < 0) fail(origin, line, "unknown arrow '" + *it + "'");
            if (!p.arrows.empty()) {
                const auto& prev = q.arrows[p.arrows.back()];
                const auto& next = q.arrows[a];
                if (prev.target != next.source)
                    fail(origin, line, "paths do not compose: target of '" + prev.name +
                                           "' is " + prev.target + " but source of '" +
                                           next.name + "' is " + next.source);
            }
            p.arrows.push_back(a);
        }
        p.source_vertex = q.vertex_index(q.arrows[p.arrows.front()].source);
        if (!rel.terms.empty()) {
            const Path& first = rel.terms.front().path;
            if (first.source_vertex != p.source_vertex || first.target(q) != p.target(q))
                fail(origin, line, "relation terms are not parallel paths");
        }
        rel.terms.push_back({coeff, p});
        if (i >= toks.size()) break;
        if (toks[i].kind == Token::Plus) {
            sign = 1;
        } else if (toks[i].kind == Token::Minus) {
            sign = -1;
        } else {
            fail(origin, line, "expected '+' or '-', got '" + toks[i].text + "'");
        }
        ++i;
        if (i >= toks.size()) fail(origin, line, "expression ends after '+'/'-'");
    }
    return rel;
}

Mat parse_matrix(const std::string& body, const std::string& origin, int line) {
    size_t open = body.find('[');
    size_t close = body.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
        fail(origin, line, "matrix must be bracketed: [r00 r01; r10 r11]");
    if (!trim(body.substr(0, open)).empty() || !trim(body.substr(close + 1)).empty())
        fail(origin, line, "unexpected text around matrix literal");
    std::string inner = body.substr(open + 1, close - open - 1);
    std::vector<Vec> rows;
    std::stringstream ss(inner);
    std::string rowtext;
    while (std::getline(ss, rowtext, ';')) {
        Vec row;
        for (const std::string& tok : split_ws(rowtext)) {
            try {
                size_t used = 0;
                i64 v = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                row.push_back(v);
            } catch (const std::exception&) {
                fail(origin, line, "bad matrix entry '" + tok + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    size_t width = rows.empty() ? 0 : rows[0].size();
    for (const Vec& r : rows)
        if (r.size() != width) fail(origin, line, "ragged matrix rows");
    Mat m(static_cast<int>(rows.size()), static_cast<int>(width));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    return m;
}

i64 parse_int(const std::string& s, const std::string& origin, int line) {
    try {
        size_t used = 0;
        i64 v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(origin, line, "expected an integer, got '" + s + "'");
    }
}

}  // namespace

const SpecModule* AlgebraSpec::find_module(const std::string& name) const {
    for (const SpecModule& m : modules)
        if (m.name == name) return &m;
    return nullptr;
}

const std::vector<std::string>* AlgebraSpec::find_idempotent(const std::string& name) const {
    for (const auto& [n, verts] : idempotents)
        if (n == name) return &verts;
    return nullptr;
}

AlgebraSpec parse_spec_text(const std::string& text, const std::string& origin) {
    AlgebraSpec spec;
    enum Section { None, Field, QuiverSec, Relations, Idempotents, Modules, Options };
    Section section = None;
    SpecModule* cur_module = nullptr;
    std::vector<std::string> pending_relations;
    std::vector<int> pending_lines;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string s = trim(raw);
        if (s.empty()) continue;
        if (s.front() == '[' && s.back() == ']') {
            std::string name = trim(s.substr(1, s.size() - 2));
            if (name == "field") section = Field;
            else if (name == "quiver") section = QuiverSec;
            else if (name == "relations") section = Relations;
            else if (name == "idempotents") section = Idempotents;
            else if (name == "modules") section = Modules;
            else if (name == "options") section = Options;
            else fail(origin, line, "unknown section [" + name + "]");
            cur_module = nullptr;
            continue;
        }
        switch (section) {
            case None:
                fail(origin, line, "content before the first section header");
            case Field: {
                size_t eq = s.find('=');
                if (eq == std::string::npos || trim(s.substr(0, eq)) != "p")
                    fail(origin, line, "only 'p = <prime>' is allowed in [field]");
                spec.p = parse_int(trim(s.substr(eq + 1)), origin, line);
                if (spec.p < 2) fail(origin, line, "field characteristic must be >= 2");
                break;
            }
            case QuiverSec: {
                if (s.rfind("vertices", 0) == 0) {
                    size_t eq = s.find('=');
                    if (eq == std::string::npos || trim(s.substr(0, eq)) != "vertices")
                        fail(origin, line, "expected 'vertices = v1 v2 ...'");
                    spec.quiver.vertices = split_ws(s.substr(eq + 1));
                    if (spec.quiver.vertices.empty())
                        fail(origin, line, "vertex list is empty");
                } else if (s.rfind("arrow", 0) == 0) {
                    // arrow NAME : SRC -> TGT
                    std::string rest = trim(s.substr(5));
                    size_t colon = rest.find(':');
                    if (colon == std::string::npos)
                        fail(origin, line, "expected 'arrow name : src -> tgt'");
                    std::string name = trim(rest.substr(0, colon));
                    std::string ends = rest.substr(colon + 1);
                    size_t ar = ends.find("->");
                    if (name.empty() || ar == std::string::npos)
                        fail(origin, line, "expected 'arrow name : src -> tgt'");
                    std::string src = trim(ends.substr(0, ar));
                    std::string tgt = trim(ends.substr(ar + 2));
                    if (src.empty() || tgt.empty())
                        fail(origin, line, "expected 'arrow name : src -> tgt'");
                    spec.quiver.arrows.push_back({name, src, tgt});
                } else {
                    fail(origin, line, "unknown [quiver] entry (expected 'vertices' or 'arrow')");
                }
                break;
            }
            case Relations:
                // resolved after the whole file is read so quiver order is free
                pending_relations.push_back(s);
                pending_lines.push_back(line);
                break;
            case Idempotents: {
                size_t eq = s.find('=');
                if (eq == std::string::npos)
                    fail(origin, line, "expected 'name = v1 v2 ...'");
                std::string name = trim(s.substr(0, eq));
                std::vector<std::string> verts = split_ws(s.substr(eq + 1));
                if (name.empty() || verts.empty())
                    fail(origin, line, "expected 'name = v1 v2 ...'");
                spec.idempotents.emplace_back(name, verts);
                break;
            }
            case Modules: {
                if (s.rfind("module", 0) == 0 && (s.size() == 6 || std::isspace(static_cast<unsigned char>(s[6])))) {
                    std::string name = trim(s.substr(6));
                    if (name.empty()) fail(origin, line, "module needs a name");
                    spec.modules.push_back(SpecModule{name, {}, {}});
                    cur_module = &spec.modules.back();
                } else if (s.rfind("dim", 0) == 0) {
                    if (!cur_module) fail(origin, line, "'dim' before any 'module' line");
                    size_t eq = s.find('=');
                    if (eq == std::string::npos)
                        fail(origin, line, "expected 'dim <vertex> = <n>'");
                    std::string vertex = trim(s.substr(3, eq - 3));
                    i64 d = parse_int(trim(s.substr(eq + 1)), origin, line);
                    if (vertex.empty() || d < 0)
                        fail(origin, line, "expected 'dim <vertex> = <n>' with n >= 0");
                    cur_module->vertex_dims[vertex] = static_cast<int>(d);
                } else if (s.rfind("arrow", 0) == 0) {
                    if (!cur_module) fail(origin, line, "'arrow' before any 'module' line");
                    size_t eq = s.find('=');
                    if (eq == std::string::npos)
                        fail(origin, line, "expected 'arrow <name> = [..]'");
                    std::string name = trim(s.substr(5, eq - 5));
                    if (name.empty()) fail(origin, line, "expected 'arrow <name> = [..]'");
                    cur_module->arrow_mats[name] = parse_matrix(s.substr(eq + 1), origin, line);
                } else {
                    fail(origin, line, "unknown [modules] entry (expected module/dim/arrow)");
                }
                break;
            }
            case Options: {
                size_t eq = s.find('=');
                if (eq == std::string::npos) fail(origin, line, "expected 'key = value'");
                std::string key = trim(s.substr(0, eq));
                i64 v = parse_int(trim(s.substr(eq + 1)), origin, line);
                if (key == "length_cap") {
                    if (v < 1) fail(origin, line, "length_cap must be positive");
                    spec.length_cap = static_cast<int>(v);
                } else if (key == "bound") {
                    if (v < 1) fail(origin, line, "bound must be positive");
                    spec.bound = static_cast<int>(v);
                } else if (key == "seed") {
                    if (v < 0) fail(origin, line, "seed must be nonnegative");
                    spec.seed = static_cast<unsigned long>(v);
                } else {
                    fail(origin, line, "unknown option '" + key + "'");
                }
                break;
            }
        }
    }
    if (spec.quiver.vertices.empty()) fail(origin, line, "missing [quiver] vertices");
    spec.quiver.validate();
    for (size_t i = 0; i < pending_relations.size(); ++i)
        spec.relations.push_back(
            parse_relation(pending_relations[i], spec.quiver, origin, pending_lines[i]));
    for (const auto& [name, verts] : spec.idempotents)
        for (const std::string& v : verts)
            if (spec.quiver.vertex_index(v) < 0)
                fail(origin, line, "idempotent '" + name + "' uses unknown vertex '" + v + "'");
    for (const SpecModule& m : spec.modules) {
        for (const auto& [v, d] : m.vertex_dims)
            if (spec.quiver.vertex_index(v) < 0)
                fail(origin, line, "module '" + m.name + "' uses unknown vertex '" + v + "'");
        for (const auto& [a, mat] : m.arrow_mats)
            if (spec.quiver.arrow_index(a) < 0)
                fail(origin, line, "module '" + m.name + "' uses unknown arrow '" + a + "'");
    }
    return spec;
}

AlgebraSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str(), path);
}

QuiverAlgebra build_spec_algebra(const AlgebraSpec& spec) {
    return build_algebra(spec.quiver, spec.relations, spec.length_cap);
}

Module build_spec_module(const QuiverAlgebra& qa, const SpecModule& sm) {
    const Quiver& q = qa.quiver;
    std::vector<int> dims(q.vertices.size(), 0);
    for (const auto& [v, d] : sm.vertex_dims) dims[q.vertex_index(v)] = d;
    std::vector<int> offset(q.vertices.size() + 1, 0);
    for (size_t i = 0; i < q.vertices.size(); ++i) offset[i + 1] = offset[i] + dims[i];
    int total = offset.back();

    std::vector<Mat> arrow_act;  // dim(target) x dim(source) per arrow
    for (const auto& ar : q.arrows) {
        int sd = dims[q.vertex_index(ar.source)];
        int td = dims[q.vertex_index(ar.target)];
        auto it = sm.arrow_mats.find(ar.name);
        if (it == sm.arrow_mats.end()) {
            arrow_act.push_back(Mat(td, sd));
        } else {
            const Mat& m = it->second;
            if (m.rows != td || m.cols != sd)
                throw std::runtime_error("module '" + sm.name + "': matrix for arrow '" +
                                         ar.name + "' must be " + std::to_string(td) + "x" +
                                         std::to_string(sd));
            Mat norm(td, sd);
            for (int r = 0; r < td; ++r)
                for (int c = 0; c < sd; ++c) norm.at(r, c) = fp::normalize(m.at(r, c));
            arrow_act.push_back(norm);
        }
    }

    Module out;
    out.alg = qa.alg;
    out.dim = total;
    for (const Path& p : qa.basis_paths) {
        Mat act(total, total);
        int src = p.source_vertex;
        if (p.arrows.empty()) {
            for (int r = 0; r < dims[src]; ++r) act.at(offset[src] + r, offset[src] + r) = 1;
        } else {
            Mat block = arrow_act[p.arrows.front()];
            for (size_t k = 1; k < p.arrows.size(); ++k) block = arrow_act[p.arrows[k]] * block;
            int tgt = q.vertex_index(q.arrows[p.arrows.back()].target);
            for (int r = 0; r < block.rows; ++r)
                for (int c = 0; c < block.cols; ++c)
                    act.at(offset[tgt] + r, offset[src] + c) = block.at(r, c);
        }
        out.action.push_back(act);
    }
    try {
        out.validate();
    } catch (const std::exception& ex) {
        throw std::runtime_error("module '" + sm.name +
                                 "' does not define a representation: " + ex.what());
    }
    return out;
}

}  // namespace qha
