#include "qlab/textio.hpp"

#include <cctype>
#include <sstream>

#include "qlab/error.hpp"

namespace qlab {
namespace {

struct Token {
    std::string text;
    int line = 0;  // 1-based
    int col = 0;   // 1-based
};

// Splits into word tokens; '#' kills the rest of its line.  "<=" and ":" are
// kept attached to words exactly as written, so callers split on them.
std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
    std::vector<std::vector<Token>> out;
    int line_no = 1;
    size_t i = 0;
    std::vector<Token> cur;
    int col = 1;
    auto flush_line = [&] {
        if (!cur.empty()) out.push_back(std::move(cur));
        cur.clear();
    };
    std::string word;
    int word_col = 0;
    auto flush_word = [&] {
        if (!word.empty()) cur.push_back({word, line_no, word_col});
        word.clear();
    };
    bool in_comment = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '\n') {
            flush_word();
            flush_line();
            in_comment = false;
            ++line_no;
            col = 1;
            continue;
        }
        if (!in_comment) {
            if (c == '#') {
                flush_word();
                in_comment = true;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                flush_word();
            } else {
                if (word.empty()) word_col = col;
                word.push_back(c);
            }
        }
        ++col;
    }
    flush_word();
    flush_line();
    return out;
}

[[noreturn]] void fail_at(const std::string& msg, const Token& t) {
    throw parse_error(msg, t.line, t.col);
}

[[noreturn]] void fail_line(const std::string& msg, const std::vector<Token>& line) {
    throw parse_error(msg, line.front().line, line.front().col);
}

// A directive line "key: rest..." — returns key without ':' and splices the
// remainder tokens (the ':' may be glued to the key or stand alone).
bool directive(const std::vector<Token>& line, std::string& key, std::vector<Token>& rest) {
    const std::string& head = line.front().text;
    auto pos = head.find(':');
    if (pos == std::string::npos) {
        if (line.size() >= 2 && line[1].text == ":") {
            key = head;
            rest.assign(line.begin() + 2, line.end());
            return true;
        }
        return false;
    }
    key = head.substr(0, pos);
    rest.clear();
    if (pos + 1 < head.size()) {
        Token t = line.front();
        t.text = head.substr(pos + 1);
        t.col += static_cast<int>(pos) + 1;
        rest.push_back(t);
    }
    rest.insert(rest.end(), line.begin() + 1, line.end());
    return true;
}

int elem_index(const std::vector<std::string>& names, const Token& t) {
    for (size_t k = 0; k < names.size(); ++k)
        if (names[k] == t.text) return static_cast<int>(k);
    fail_at("unknown element '" + t.text + "'", t);
}

}  // namespace

Quantale parse_quantale(std::string_view text) {
    auto lines = tokenize_lines(text);
    if (lines.empty()) throw parse_error("empty input", 1, 1);
    size_t li = 0;

    // header
    {
        const auto& l = lines[li];
        if (l.front().text != "quantale")
            fail_line("expected 'quantale <name>'", l);
        if (l.size() != 2) fail_line("expected 'quantale <name>'", l);
        ++li;
    }
    std::string name = lines[0][1].text;

    std::vector<std::string> names;
    std::vector<std::pair<Elem, Elem>> pairs;
    bool saw_order = false;
    int unit = -1;
    std::vector<Elem> tensor;
    std::vector<Elem> residual;
    bool saw_residual = false;

    auto read_matrix = [&](size_t& k, const Token& at) {
        std::vector<Elem> m;
        size_t n = names.size();
        m.reserve(n * n);
        for (size_t r = 0; r < n; ++r) {
            if (k >= lines.size())
                fail_at("expected " + std::to_string(n) + " matrix rows", at);
            const auto& row = lines[k];
            if (row.size() != n)
                fail_line("expected " + std::to_string(n) + " entries in matrix row", row);
            for (const auto& t : row) m.push_back(elem_index(names, t));
            ++k;
        }
        return m;
    };

    // a <= b triples, possibly glued: "a<=b" or "a<= b" or "a <=b"
    auto read_order_tokens = [&](const std::vector<Token>& toks, const std::vector<Token>& l) {
        std::vector<Token> expanded;
        for (const auto& t : toks) {
            auto pos = t.text.find("<=");
            if (pos == std::string::npos) {
                expanded.push_back(t);
                continue;
            }
            if (pos > 0) {
                Token a = t;
                a.text = t.text.substr(0, pos);
                expanded.push_back(a);
            }
            Token op = t;
            op.text = "<=";
            op.col += static_cast<int>(pos);
            expanded.push_back(op);
            if (pos + 2 < t.text.size()) {
                Token b = t;
                b.text = t.text.substr(pos + 2);
                b.col += static_cast<int>(pos) + 2;
                expanded.push_back(b);
            }
        }
        if (expanded.size() % 3 != 0) fail_line("'order:' expects '<a> <= <b>' pairs", l);
        for (size_t k = 0; k < expanded.size(); k += 3) {
            if (expanded[k + 1].text != "<=")
                fail_at("expected '<='", expanded[k + 1]);
            pairs.emplace_back(elem_index(names, expanded[k]),
                               elem_index(names, expanded[k + 2]));
        }
    };

    bool in_order = false;  // 'order:' accepts continuation lines of pairs
    while (li < lines.size()) {
        const auto& l = lines[li];
        std::string key;
        std::vector<Token> rest;
        if (!directive(l, key, rest)) {
            if (in_order) {
                read_order_tokens(l, l);
                ++li;
                continue;
            }
            fail_line("expected a '<section>:' directive", l);
        }
        in_order = false;
        ++li;
        if (key == "elements") {
            if (!names.empty()) fail_line("duplicate 'elements:' section", l);
            for (const auto& t : rest) {
                for (const auto& prev : names)
                    if (prev == t.text) fail_at("duplicate element '" + t.text + "'", t);
                names.push_back(t.text);
            }
            if (names.empty()) fail_line("'elements:' lists no elements", l);
        } else if (key == "order") {
            if (names.empty()) fail_line("'order:' before 'elements:'", l);
            saw_order = true;
            in_order = true;
            read_order_tokens(rest, l);
        } else if (key == "unit") {
            if (names.empty()) fail_line("'unit:' before 'elements:'", l);
            if (rest.size() != 1) fail_line("'unit:' expects one element", l);
            unit = elem_index(names, rest[0]);
        } else if (key == "tensor") {
            if (names.empty()) fail_line("'tensor:' before 'elements:'", l);
            if (!rest.empty()) fail_at("matrix rows start on the next line", rest[0]);
            tensor = read_matrix(li, l.front());
        } else if (key == "residual") {
            if (names.empty()) fail_line("'residual:' before 'elements:'", l);
            if (!rest.empty()) fail_at("matrix rows start on the next line", rest[0]);
            residual = read_matrix(li, l.front());
            saw_residual = true;
        } else {
            fail_line("unknown section '" + key + "'", l);
        }
    }

    if (names.empty()) throw parse_error("missing 'elements:' section", 1, 1);
    if (!saw_order) throw parse_error("missing 'order:' section", 1, 1);
    if (unit < 0) throw parse_error("missing 'unit:' section", 1, 1);
    if (tensor.empty()) throw parse_error("missing 'tensor:' section", 1, 1);

    auto lat = FiniteLattice::from_pairs(names, pairs);
    auto q = Quantale::create(name, lat, tensor, unit);

    if (saw_residual) {
        int n = q.size();
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (residual[a * n + b] != q.residual(a, b))
                    throw input_error(
                        "declared residual table disagrees with the one derived "
                        "from the tensor: residual(" +
                        q.elem_name(a) + ", " + q.elem_name(b) + ") is " +
                        q.elem_name(q.residual(a, b)) + ", file says " +
                        q.elem_name(residual[a * n + b]));
    }
    return q;
}

std::string serialize_quantale(const Quantale& q) {
    std::ostringstream os;
    os << "quantale " << q.name() << "\n";
    os << "elements:";
    for (Elem e = 0; e < q.size(); ++e) os << ' ' << q.elem_name(e);
    os << "\n";
    os << "order:";
    bool first = true;
    for (auto [a, b] : q.lattice().cover_pairs()) {
        os << (first ? " " : "\n      ") << q.elem_name(a) << " <= " << q.elem_name(b);
        first = false;
    }
    if (first) os << "  # trivial";
    os << "\n";
    os << "unit: " << q.elem_name(q.unit()) << "\n";
    os << "tensor:\n";
    for (Elem a = 0; a < q.size(); ++a) {
        os << " ";
        for (Elem b = 0; b < q.size(); ++b) os << ' ' << q.elem_name(q.tensor(a, b));
        os << "\n";
    }
    return os.str();
}

QSetFile parse_qset_file(std::string_view text) {
    auto lines = tokenize_lines(text);
    if (lines.empty()) throw parse_error("empty input", 1, 1);
    size_t li = 0;
    {
        const auto& l = lines[li];
        if (l.front().text != "qset" || l.size() != 4 || l[2].text != "over")
            fail_line("expected 'qset <name> over <quantale-name>'", l);
        ++li;
    }
    QSetFile f;
    f.name = lines[0][1].text;
    f.quantale_name = lines[0][3].text;

    bool saw_elems = false;
    while (li < lines.size()) {
        const auto& l = lines[li];
        std::string key;
        std::vector<Token> rest;
        if (!directive(l, key, rest))
            fail_line("expected a '<section>:' directive", l);
        ++li;
        if (key == "elements") {
            if (saw_elems) fail_line("duplicate 'elements:' section", l);
            saw_elems = true;
            for (const auto& t : rest) {
                for (const auto& prev : f.elems)
                    if (prev == t.text) fail_at("duplicate element '" + t.text + "'", t);
                f.elems.push_back(t.text);
            }
        } else if (key == "hom") {
            if (!saw_elems) fail_line("'hom:' before 'elements:'", l);
            if (!rest.empty()) fail_at("matrix rows start on the next line", rest[0]);
            size_t n = f.elems.size();
            for (size_t r = 0; r < n; ++r) {
                if (li >= lines.size())
                    fail_line("expected " + std::to_string(n) + " hom rows", l);
                const auto& row = lines[li];
                if (row.size() != n)
                    fail_line("expected " + std::to_string(n) + " entries in hom row", row);
                for (const auto& t : row) f.entries.push_back(t.text);
                ++li;
            }
        } else {
            fail_line("unknown section '" + key + "'", l);
        }
    }
    if (!saw_elems) throw parse_error("missing 'elements:' section", 1, 1);
    if (f.entries.size() != f.elems.size() * f.elems.size())
        throw parse_error("missing 'hom:' section", 1, 1);
    return f;
}

FileKind sniff_kind(std::string_view text) {
    auto lines = tokenize_lines(text);
    if (lines.empty()) throw parse_error("empty input", 1, 1);
    const auto& head = lines[0].front();
    if (head.text == "quantale") return FileKind::quantale;
    if (head.text == "qset") return FileKind::qset;
    fail_at("expected 'quantale' or 'qset'", head);
}

}  // namespace qlab
