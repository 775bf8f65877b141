#include "pcoh/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include "pcoh/errors.hpp"

namespace pcoh {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::vector<std::vector<std::string>> token_lines(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::vector<std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> toks = tokens_of(line);
        if (!toks.empty()) out.push_back(std::move(toks));
    }
    return out;
}

Rat parse_rat(const std::string& tok, const std::string& where) {
    std::optional<Rat> r = rat_parse(tok);
    if (!r) throw ParseError("bad rational '" + tok + "' in " + where);
    return *r;
}

RatVec parse_dense(const std::vector<std::string>& toks, std::size_t from, int dim,
                   const std::string& where) {
    if (static_cast<int>(toks.size() - from) != dim)
        throw ParseError(where + " needs " + std::to_string(dim) + " entries, got " +
                         std::to_string(toks.size() - from));
    RatVec out;
    for (int i = 0; i < dim; ++i) {
        Rat v = parse_rat(toks[from + static_cast<std::size_t>(i)], where);
        if (v != 0) out.set(i, v);
    }
    return out;
}

void print_dense(std::ostringstream& out, const RatVec& v, int dim) {
    for (int i = 0; i < dim; ++i) out << ' ' << rat_str(v.at(i));
    out << '\n';
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string join_commas(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += parts[i];
    }
    return out;
}

}  // namespace

std::string polytope_to_text(const Polytope& p) {
    std::ostringstream out;
    out << "web:";
    for (const std::string& l : p.web()->labels()) out << ' ' << l;
    out << '\n';
    if (p.has_hrep())
        for (const RatVec& row : p.hrep()) {
            out << "H:";
            print_dense(out, row, p.dim());
        }
    if (p.has_vrep())
        for (const RatVec& row : p.vrep()) {
            out << "V:";
            print_dense(out, row, p.dim());
        }
    return out.str();
}

Polytope polytope_from_text(const std::string& text) {
    auto lines = token_lines(text);
    if (lines.empty() || lines[0][0] != "web:")
        throw ParseError("polytope text must start with a 'web:' line");
    std::vector<std::string> labels(lines[0].begin() + 1, lines[0].end());
    WebPtr web = make_web(std::move(labels));
    std::vector<RatVec> facets, gens;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& toks = lines[i];
        if (toks[0] == "H:")
            facets.push_back(parse_dense(toks, 1, web->size(), "facet row"));
        else if (toks[0] == "V:")
            gens.push_back(parse_dense(toks, 1, web->size(), "generator row"));
        else
            throw ParseError("unexpected line '" + toks[0] + "' in polytope text");
    }
    if (!facets.empty() && !gens.empty())
        return Polytope::from_both(web, std::move(facets), std::move(gens));
    if (!facets.empty()) return Polytope::from_hrep(web, std::move(facets));
    if (!gens.empty()) return Polytope::from_vrep(web, std::move(gens));
    throw ParseError("polytope text has no rows");
}

std::string pcs_to_text(const Pcs& x) { return "pcs\n" + polytope_to_text(x.ball()); }

Pcs pcs_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string first;
    if (!std::getline(in, first) || tokens_of(first) != std::vector<std::string>{"pcs"})
        throw ParseError("pcs text must start with a 'pcs' line");
    std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return Pcs::from_ball(polytope_from_text(rest));
}

std::string vec_to_text(const RatVec& v, int dim) {
    std::ostringstream out;
    out << "vec:";
    print_dense(out, v, dim);
    return out.str();
}

RatVec vec_from_text(const std::string& text) {
    auto lines = token_lines(text);
    if (lines.size() != 1 || lines[0][0] != "vec:")
        throw ParseError("vector text is a single 'vec:' line");
    RatVec out;
    for (std::size_t i = 1; i < lines[0].size(); ++i) {
        Rat v = parse_rat(lines[0][i], "vector entry");
        if (v != 0) out.set(static_cast<int>(i) - 1, v);
    }
    return out;
}

std::string matrix_to_text(const MorphMatrix& t, const std::string& dom_path,
                           const std::string& cod_path) {
    std::ostringstream out;
    out << "matrix " << dom_path << ' ' << cod_path << '\n';
    for (int a = 0; a < t.dom().dim(); ++a)
        for (const auto& [b, v] : t.row(a).entries())
            out << t.dom().web()->label(a) << ' ' << t.cod().web()->label(b) << ' '
                << rat_str(v) << '\n';
    return out.str();
}

MatrixText matrix_text_parse(const std::string& text) {
    auto lines = token_lines(text);
    if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "matrix")
        throw ParseError("matrix text must start with 'matrix dom.pcs cod.pcs'");
    MatrixText mt;
    mt.dom_path = lines[0][1];
    mt.cod_path = lines[0][2];
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].size() != 3)
            throw ParseError("matrix entry lines are 'row col value'");
        mt.entries.push_back(
            {lines[i][0], lines[i][1], parse_rat(lines[i][2], "matrix entry")});
    }
    return mt;
}

MorphMatrix matrix_assemble(const MatrixText& mt, const Pcs& dom, const Pcs& cod) {
    std::vector<RatVec> rows(static_cast<std::size_t>(dom.dim()));
    for (const auto& e : mt.entries) {
        std::optional<int> a = dom.web()->find(e.row);
        if (!a) throw ParseError("matrix row label '" + e.row + "' not in the domain web");
        std::optional<int> b = cod.web()->find(e.col);
        if (!b)
            throw ParseError("matrix column label '" + e.col + "' not in the codomain web");
        rows[static_cast<std::size_t>(*a)].set(*b, e.value);
    }
    // Files may hold arbitrary matrices; norm checks happen at use sites.
    return MorphMatrix::make(dom, cod, std::move(rows), MorphMatrix::Check::Skip);
}

std::string kernel_to_text(const Kernel& k) {
    std::ostringstream out;
    out << "kernel " << join_commas(k.dom().points()->labels()) << ' '
        << join_commas(k.cod().points()->labels()) << '\n';
    for (int r = 0; r < k.dom().size(); ++r)
        for (const auto& [y, v] : k.row(r).entries())
            out << k.dom().points()->label(r) << ' ' << k.cod().points()->label(y) << ' '
                << rat_str(v) << '\n';
    return out.str();
}

Kernel kernel_from_text(const std::string& text) {
    auto lines = token_lines(text);
    if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "kernel")
        throw ParseError("kernel text must start with 'kernel dom-points cod-points'");
    DiscreteSpace dom(split_commas(lines[0][1]));
    DiscreteSpace cod(split_commas(lines[0][2]));
    std::vector<RatVec> rows(static_cast<std::size_t>(dom.size()));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].size() != 3)
            throw ParseError("kernel entry lines are 'row col value'");
        std::optional<int> r = dom.points()->find(lines[i][0]);
        if (!r)
            throw ParseError("kernel row label '" + lines[i][0] + "' not a domain point");
        std::optional<int> y = cod.points()->find(lines[i][1]);
        if (!y)
            throw ParseError("kernel column label '" + lines[i][1] +
                             "' not a codomain point");
        rows[static_cast<std::size_t>(*r)].set(*y, parse_rat(lines[i][2], "kernel entry"));
    }
    return Kernel::make(std::move(dom), std::move(cod), std::move(rows));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::filesystem::path parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(parent, ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write file: " + path);
    out << text;
    if (!out) throw ParseError("write failed: " + path);
}

Pcs load_pcs(const std::string& path) { return pcs_from_text(read_text_file(path)); }

RatVec load_vec(const std::string& path) { return vec_from_text(read_text_file(path)); }

Kernel load_kernel(const std::string& path) {
    return kernel_from_text(read_text_file(path));
}

MorphMatrix load_matrix(const std::string& path) {
    MatrixText mt = matrix_text_parse(read_text_file(path));
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    auto resolve = [&](const std::string& p) {
        std::filesystem::path fp(p);
        return fp.is_absolute() ? fp.string() : (base / fp).string();
    };
    Pcs dom = load_pcs(resolve(mt.dom_path));
    Pcs cod = load_pcs(resolve(mt.cod_path));
    return matrix_assemble(mt, dom, cod);
}

}  // namespace pcoh
