#include "mobpoly/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace mobpoly::io {

namespace {

std::string next_content_line(std::istream& in, bool required, const char* what) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        if (!blank) return line;
    }
    if (required) throw ParseError(std::string("missing ") + what);
    return {};
}

std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

int parse_header_int(const std::string& tok, const char* key) {
    std::string prefix = std::string(key) + "=";
    if (tok.rfind(prefix, 0) != 0)
        throw ParseError("expected " + prefix + "<int>, got '" + tok + "'");
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok.substr(prefix.size()), &pos);
        if (pos != tok.size() - prefix.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad integer in '" + tok + "'");
    }
}

} // namespace

TruthTable read_truth_table(std::istream& in) {
    auto head = tokens(next_content_line(in, true, "truth-table header"));
    if (head.size() != 3 || head[0] != "truthtable" || head[1] != "v1")
        throw ParseError("expected header 'truthtable v1 n=<n>'");
    int n = parse_header_int(head[2], "n");
    if (n < 1 || n > kMaxTableVars)
        throw TooLarge("truth table n must be in [1, " + std::to_string(kMaxTableVars) + "]");
    std::string row = next_content_line(in, true, "truth-table value row");
    const std::size_t want = std::size_t{1} << n;
    if (row.size() != want)
        throw ParseError("expected " + std::to_string(want) + " values, got " +
                         std::to_string(row.size()));
    std::vector<std::uint8_t> values(want);
    for (std::size_t i = 0; i < want; ++i) {
        if (row[i] != '0' && row[i] != '1')
            throw ParseError(std::string("bad truth-table character '") + row[i] + "'");
        values[i] = static_cast<std::uint8_t>(row[i] - '0');
    }
    return TruthTable(n, std::move(values));
}

void write_truth_table(std::ostream& out, const TruthTable& t) {
    out << "truthtable v1 n=" << t.n << "\n";
    std::string row(t.values.size(), '0');
    for (std::size_t i = 0; i < t.values.size(); ++i)
        if (t.values[i]) row[i] = '1';
    out << row << "\n";
}

FamilyFile read_family(std::istream& in) {
    auto head = tokens(next_content_line(in, true, "lattice header"));
    if (head.size() != 3 || head[0] != "lattice" || head[1] != "v1")
        throw ParseError("expected header 'lattice v1 m=<m>'");
    FamilyFile f;
    f.m = parse_header_int(head[2], "m");
    if (f.m < 0) throw ParseError("m must be non-negative");
    for (;;) {
        std::string line = next_content_line(in, false, "");
        if (line.empty()) break;
        auto toks = tokens(line);
        if (toks.size() != 1) throw ParseError("expected one member per line, got '" + line + "'");
        f.members.push_back(parse_ids(toks[0], f.m));
    }
    return f;
}

void write_family(std::ostream& out, int m, const std::vector<Bitset>& members) {
    out << "lattice v1 m=" << m << "\n";
    for (const Bitset& b : members) out << format_ids(b) << "\n";
}

RawDigraph read_digraph(std::istream& in) {
    auto head = tokens(next_content_line(in, true, "digraph header"));
    if (head.size() != 2 || head[0] != "digraph" || head[1] != "v1")
        throw ParseError("expected header 'digraph v1'");
    RawDigraph g;
    for (;;) {
        std::string line = next_content_line(in, false, "");
        if (line.empty()) break;
        auto toks = tokens(line);
        if (toks.size() == 2 && toks[0] == "source") {
            g.declared_sources.push_back(g.vertex(toks[1]));
        } else if (toks.size() == 2 && toks[0] == "sink") {
            g.declared_sinks.push_back(g.vertex(toks[1]));
        } else if (toks.size() == 2) {
            g.add_arc(toks[0], toks[1]);
        } else {
            throw ParseError("expected 'u v', 'source u', or 'sink v', got '" + line + "'");
        }
    }
    if (g.arcs.empty()) throw ParseError("digraph has no arcs");
    return g;
}

std::string format_ids(const Bitset& s, char sep) {
    if (s.empty() || s.count() == 0) return "-";
    std::string out;
    for (int b : s.bits()) {
        if (!out.empty()) out.push_back(sep);
        out += std::to_string(b + 1);
    }
    return out;
}

Bitset parse_ids(const std::string& text, int m) {
    Bitset b;
    if (text == "-") return b;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
        int id = 0;
        try {
            std::size_t used = 0;
            id = std::stoi(piece, &used);
            if (used != piece.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("bad id '" + piece + "'");
        }
        if (id < 1 || id > m)
            throw ParseError("id " + std::to_string(id) + " out of range [1, " +
                             std::to_string(m) + "]");
        b.set(static_cast<std::size_t>(id - 1));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return b;
}

int max_arc_id(const Dag& g) {
    int m = 0;
    for (const Arc& a : g.arcs) m = std::max(m, a.id);
    for (int id : g.irrelevant) m = std::max(m, id);
    return m;
}

Bitset indices_to_ids(const Dag& g, const Bitset& idx) {
    Bitset out;
    for (int i : idx.bits()) out.set(static_cast<std::size_t>(g.arcs[static_cast<std::size_t>(i)].id - 1));
    return out;
}

Bitset ids_to_indices(const Dag& g, const Bitset& ids) {
    Bitset out;
    for (int b : ids.bits()) {
        int id = b + 1;
        bool found = false;
        for (std::size_t i = 0; i < g.arcs.size(); ++i)
            if (g.arcs[i].id == id) {
                out.set(i);
                found = true;
                break;
            }
        if (!found)
            throw ParseError("arc id " + std::to_string(id) + " is not in the graph");
    }
    return out;
}

MultilinearPoly relabel_to_ids(const Dag& g, const MultilinearPoly& p) {
    MultilinearPoly out;
    out.n = max_arc_id(g);
    for (const auto& [vars, coef] : p.terms) out.add_term(indices_to_ids(g, vars), coef);
    return out;
}

std::string format_coef(const mpz_class& c) {
    std::string s = c.get_str();
    if (!s.empty() && s[0] != '-') s.insert(s.begin(), '+');
    return s;
}

void write_poly_text(std::ostream& out, const MultilinearPoly& p) {
    for (const auto& [vars, coef] : p.terms)
        out << format_coef(coef) << " " << format_ids(vars, '*') << "\n";
}

std::string poly_to_json(const MultilinearPoly& p) {
    nlohmann::ordered_json j;
    j["n"] = p.n;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [vars, coef] : p.terms) {
        nlohmann::ordered_json t;
        t["coef"] = format_coef(coef);
        t["vars"] = nlohmann::ordered_json::array();
        for (int b : vars.bits()) t["vars"].push_back(b + 1);
        j["terms"].push_back(std::move(t));
    }
    return j.dump(2);
}

MultilinearPoly poly_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        throw ParseError("expected {\"n\": ..., \"terms\": [...]}");
    MultilinearPoly p;
    p.n = j["n"].get<int>();
    for (const auto& t : j["terms"]) {
        if (!t.contains("coef") || !t.contains("vars")) throw ParseError("bad term object");
        std::string cs = t["coef"].get<std::string>();
        if (!cs.empty() && cs[0] == '+') cs.erase(cs.begin());
        mpz_class coef;
        if (coef.set_str(cs, 10) != 0) throw ParseError("bad coefficient '" + cs + "'");
        Bitset vars;
        for (const auto& v : t["vars"]) {
            int id = v.get<int>();
            if (id < 1 || id > p.n) throw ParseError("variable id out of range");
            vars.set(static_cast<std::size_t>(id - 1));
        }
        p.add_term(vars, coef);
    }
    return p;
}

std::string format_fixed(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

const char* strip_kind_name(StripKind k) { return k == StripKind::lower ? "lower" : "upper"; }

std::string growth_estimate_csv(const GrowthEstimate& e, bool header) {
    std::string out;
    if (header) out += "kind,d,raw,base,iterations\n";
    out += strip_kind_name(e.kind);
    out += "," + std::to_string(e.d) + "," + format_fixed(e.raw) + "," + format_fixed(e.base) +
           "," + std::to_string(e.iterations) + "\n";
    return out;
}

std::string growth_estimate_text(const GrowthEstimate& e) {
    std::string out = strip_kind_name(e.kind);
    out += " d=" + std::to_string(e.d) + " raw=" + format_fixed(e.raw) +
           " base=" + format_fixed(e.base) + " iterations=" + std::to_string(e.iterations) + "\n";
    return out;
}

std::string growth_estimate_json(const GrowthEstimate& e) {
    nlohmann::ordered_json j;
    j["kind"] = strip_kind_name(e.kind);
    j["d"] = e.d;
    j["raw"] = e.raw;
    j["base"] = e.base;
    j["iterations"] = e.iterations;
    return j.dump(2);
}

std::string growth_rows_csv(const std::vector<GrowthRow>& rows) {
    std::string out = "n,count,base\n";
    for (const auto& r : rows)
        out += std::to_string(r.n) + "," + r.count.get_str() + "," + format_fixed(r.base) + "\n";
    return out;
}

std::string growth_rows_text(const std::vector<GrowthRow>& rows) {
    std::string out;
    for (const auto& r : rows)
        out += "n=" + std::to_string(r.n) + " count=" + r.count.get_str() +
               " base=" + format_fixed(r.base) + "\n";
    return out;
}

std::string growth_rows_json(const std::vector<GrowthRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["n"] = r.n;
        j["count"] = r.count.get_str();
        j["base"] = r.base;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

} // namespace mobpoly::io
