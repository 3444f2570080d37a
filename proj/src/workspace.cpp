#include "amou/workspace.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace amou {

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    std::string word() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                text_[pos_] == '+' || text_[pos_] == '.'))
            ++pos_;
        if (start == pos_) err("expected a name");
        return text_.substr(start, pos_ - start);
    }

    std::string keyword() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_) err("expected a keyword");
        return text_.substr(start, pos_ - start);
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            err(std::string("expected '") + c + "'");
        ++pos_;
    }

    void expect_word(const std::string& w) {
        const std::string got = keyword();
        if (got != w) err("expected '" + w + "', got '" + got + "'");
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool peek_word(const std::string& w) {
        skip_ws();
        if (text_.compare(pos_, w.size(), w) != 0) return false;
        const std::size_t after = pos_ + w.size();
        return after >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[after]));
    }

    int integer() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) err("expected an integer");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    std::vector<int> int_list() {
        std::vector<int> out;
        expect('[');
        if (!peek(']'))
            while (true) {
                out.push_back(integer());
                if (peek(']')) break;
                expect(',');
            }
        expect(']');
        return out;
    }

    std::vector<std::vector<int>> int_matrix() {
        std::vector<std::vector<int>> out;
        expect('[');
        while (true) {
            out.push_back(int_list());
            if (peek(']')) break;
            expect(',');
        }
        expect(']');
        return out;
    }

    cplx complex_value() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' &&
               !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '#')
            ++pos_;
        if (start == pos_) err("expected a complex literal");
        return parse_complex(text_.substr(start, pos_ - start));
    }

    CMatrix complex_matrix() {
        std::vector<std::vector<cplx>> rows;
        expect('[');
        while (true) {
            std::vector<cplx> row;
            expect('[');
            if (!peek(']'))
                while (true) {
                    row.push_back(complex_value());
                    if (peek(']')) break;
                    expect(',');
                }
            expect(']');
            if (!rows.empty() && rows.front().size() != row.size()) err("ragged matrix rows");
            rows.push_back(std::move(row));
            if (peek(']')) break;
            expect(',');
        }
        expect(']');
        CMatrix m(int(rows.size()), int(rows.front().size()));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[std::size_t(i)][std::size_t(j)];
        return m;
    }

    [[noreturn]] void err(const std::string& what) {
        int line = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i)
            if (text_[i] == '\n') ++line;
        fail("ParseError", what + " at line " + std::to_string(line));
    }

private:
    void skip_ws() {
        while (pos_ < text_.size()) {
            if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            } else if (text_[pos_] == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    cplx parse_complex(const std::string& s) {
        // a+bi / a-bi, or a bare real / pure imaginary
        const bool imag = !s.empty() && s.back() == 'i';
        std::size_t split = std::string::npos;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
                split = i; // keep the last sign so exponents stay intact
        }
        try {
            if (imag && split != std::string::npos) {
                const double re = std::stod(s.substr(0, split));
                const std::string im_part = s.substr(split, s.size() - split - 1);
                return {re, std::stod(im_part)};
            }
            if (imag) return {0.0, std::stod(s.substr(0, s.size() - 1))};
            return {std::stod(s), 0.0};
        } catch (const std::exception&) {
            err("bad complex literal '" + s + "'");
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

const Algebra& lookup_algebra(const Workspace& ws, const std::string& name) {
    const auto it = ws.algebras.find(name);
    if (it == ws.algebras.end()) fail("UnknownName", "algebra '" + name + "' is not defined");
    return it->second;
}

} // namespace

std::string format_complex(cplx z) {
    const double re = z.real(), im = z.imag();
    std::string out = format_double(re);
    if (std::signbit(im)) {
        out += "-" + format_double(-im) + "i";
    } else {
        out += "+" + format_double(im) + "i";
    }
    return out;
}

Workspace parse_workspace(const std::string& text) {
    Workspace ws;
    Parser p(text);
    while (!p.at_end()) {
        const std::string kind = p.keyword();
        if (kind == "algebra") {
            const std::string name = p.word();
            p.expect_word("blocks");
            p.expect('=');
            const std::vector<int> sizes = p.int_list();
            if (sizes.empty()) p.err("algebra needs at least one block");
            for (int n : sizes)
                if (n < 1) p.err("block sizes must be positive");
            ws.algebras[name] = Algebra{sizes};
        } else if (kind == "element") {
            const std::string name = p.word();
            p.expect_word("in");
            const std::string aname = p.word();
            const Algebra& alg = lookup_algebra(ws, aname);
            p.expect_word("level");
            p.expect('(');
            const int m = p.integer();
            p.expect(',');
            const int n = p.integer();
            p.expect(')');
            if (m < 1 || n < 1) p.err("levels must be positive");
            std::vector<CMatrix> blocks;
            for (int i = 0; i < alg.block_count(); ++i) {
                p.expect_word("block");
                const int idx = p.integer();
                if (idx != i + 1) p.err("blocks must appear in order 1..k");
                p.expect('=');
                blocks.push_back(p.complex_matrix());
            }
            try {
                ws.elements[name] = WorkspaceElement{aname,
                                                     AElement::from_blocks(alg, m, n, blocks)};
            } catch (const Error& e) {
                p.err(e.what());
            }
        } else if (kind == "morphism") {
            const std::string name = p.word();
            p.expect(':');
            const std::string src = p.word();
            p.expect('-');
            p.expect('>');
            const std::string dst = p.word();
            MorphismSpec spec;
            spec.source = lookup_algebra(ws, src);
            spec.target = lookup_algebra(ws, dst);
            p.expect_word("mult");
            p.expect('=');
            spec.multiplicity = p.int_matrix();
            for (int j = 0; j < spec.target.block_count(); ++j) {
                p.expect_word("conj");
                const int idx = p.integer();
                if (idx != j + 1) p.err("conjugators must appear in order 1..l");
                p.expect('=');
                spec.conjugators.push_back(p.complex_matrix());
            }
            try {
                validate_spec(spec);
            } catch (const Error& e) {
                p.err(e.what());
            }
            ws.morphisms[name] = WorkspaceMorphism{src, dst, spec};
        } else {
            p.err("unknown record '" + kind + "'");
        }
    }
    return ws;
}

namespace {

void print_matrix(std::ostringstream& os, const CMatrix& m) {
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? "," : "") << "[";
        for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << format_complex(m(i, j));
        os << "]";
    }
    os << "]";
}

} // namespace

std::string print_workspace(const Workspace& ws) {
    std::ostringstream os;
    for (const auto& [name, alg] : ws.algebras) {
        os << "algebra " << name << " blocks = [";
        for (int i = 0; i < alg.block_count(); ++i) os << (i ? "," : "") << alg.block_size(i);
        os << "]\n";
    }
    for (const auto& [name, el] : ws.elements) {
        os << "element " << name << " in " << el.algebra_name << " level ("
           << el.value.level_rows() << "," << el.value.level_cols() << ")";
        for (int i = 0; i < el.value.block_count(); ++i) {
            os << " block " << i + 1 << " = ";
            print_matrix(os, el.value.block(i));
        }
        os << "\n";
    }
    for (const auto& [name, mo] : ws.morphisms) {
        os << "morphism " << name << " : " << mo.source_name << " -> " << mo.target_name
           << " mult = [";
        for (std::size_t j = 0; j < mo.spec.multiplicity.size(); ++j) {
            os << (j ? "," : "") << "[";
            for (std::size_t i = 0; i < mo.spec.multiplicity[j].size(); ++i)
                os << (i ? "," : "") << mo.spec.multiplicity[j][i];
            os << "]";
        }
        os << "]";
        for (std::size_t j = 0; j < mo.spec.conjugators.size(); ++j) {
            os << " conj " << j + 1 << " = ";
            print_matrix(os, mo.spec.conjugators[j]);
        }
        os << "\n";
    }
    return os.str();
}

Workspace load_workspace_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("ParseError", "cannot read workspace file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_workspace(buf.str());
}

} // namespace amou
