#include "mmc/poly_io.hpp"

#include "mmc/error.hpp"
#include "mmc/graph_io.hpp"

#include <cctype>
#include <sstream>

namespace mmc {

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& names) : s_(text), names_(names) {}

    MPoly parse() {
        MPoly p = expr();
        skip();
        if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        size_t line = 1, col = 1;
        for (size_t i = 0; i < pos_ && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw MmError(ErrorCode::ParseError, std::to_string(line) + ":" + std::to_string(col) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
    }

    MPoly expr() {
        MPoly acc(names_.size());
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (peek('+') || peek('-')) {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            MPoly t = term();
            if (sign < 0) t = -t;
            acc += t;
            first = false;
        }
        return acc;
    }

    MPoly term() {
        MPoly acc = power();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc = acc * power();
            } else if (peek('/')) {
                ++pos_;
                MPoly d = power();
                if (d.is_zero() || d.degree() != 0) fail("division only by nonzero constants");
                acc *= 1 / d.terms().begin()->second;
            } else if (starts_factor()) {
                acc = acc * power();
            } else {
                break;
            }
        }
        return acc;
    }

    MPoly power() {
        MPoly base = primary();
        if (peek('^')) {
            ++pos_;
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected an exponent");
            unsigned long k = std::stoul(s_.substr(start, pos_ - start));
            if (k > 1000) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(k));
        }
        return base;
    }

    MPoly primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MPoly inner = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '-' || c == '+') {
            ++pos_;
            MPoly inner = power();
            return c == '-' ? -inner : inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Rat v(Int(s_.substr(start, pos_ - start)));
            return MPoly::constant(names_.size(), v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            for (size_t i = 0; i < names_.size(); ++i) {
                if (names_[i] == id) return MPoly::variable(names_.size(), i);
            }
            pos_ = start;
            fail("unknown variable '" + id + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    const std::vector<std::string>& names_;
    size_t pos_ = 0;
};

std::string render(const MPoly& p, const std::vector<std::string>& names, bool m2) {
    if (names.size() != p.nvars()) throw MmError(ErrorCode::DimensionMismatch, "name list does not match ring");
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool neg = sgn(c) < 0;
        Rat a = neg ? Rat(-c) : c;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        bool constant = monomial_degree(m) == 0;
        bool wrote = false;
        if (a != 1 || constant) {
            std::string s = to_string(a);
            if (m2 && a.get_den() != 1) s = "(" + s + ")";
            out << s;
            wrote = true;
        }
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (wrote) out << "*";
            out << names[i];
            if (m[i] > 1) out << "^" << m[i];
            wrote = true;
        }
    }
    return out.str();
}

std::vector<std::string> split_words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) {
        while (!w.empty() && w.back() == ',') w.pop_back();
        if (!w.empty()) out.push_back(w);
    }
    return out;
}

}  // namespace

MPoly parse_poly(const std::string& text, const std::vector<std::string>& names) {
    return Parser(text, names).parse();
}

std::string render_poly(const MPoly& p, const std::vector<std::string>& names) { return render(p, names, false); }
std::string render_poly_m2(const MPoly& p, const std::vector<std::string>& names) { return render(p, names, true); }

std::vector<std::string> default_var_names(size_t n) {
    std::vector<std::string> out;
    for (size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

std::vector<std::string> PolyFile::all_names() const {
    std::vector<std::string> names = vars;
    names.insert(names.end(), params.begin(), params.end());
    names.push_back(eps);
    return names;
}

PolyFile parse_poly_file(const std::string& text) {
    PolyFile file;
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<size_t, std::string>> bodies;  // (first line number, text)
    std::string pending;
    size_t pending_line = 0;
    int depth = 0;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto colon = line.find(':');
        if (pending.empty() && colon != std::string::npos) {
            std::string key = line.substr(0, colon);
            key.erase(0, key.find_first_not_of(" \t"));
            key.erase(key.find_last_not_of(" \t") + 1);
            auto words = split_words(line.substr(colon + 1));
            if (key == "vars") {
                file.vars = words;
            } else if (key == "params") {
                file.params = words;
            } else if (key == "eps") {
                if (words.size() != 1) throw MmError(ErrorCode::ParseError, std::to_string(lineno) + ":1: eps header needs one name");
                file.eps = words[0];
            } else {
                throw MmError(ErrorCode::ParseError, std::to_string(lineno) + ":1: unknown header '" + key + "'");
            }
            continue;
        }
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        if (trimmed.find_last_not_of(" \t\r") != std::string::npos) trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
        else trimmed.clear();
        if (trimmed.empty() && pending.empty()) continue;
        if (pending.empty()) pending_line = lineno;
        pending += " " + trimmed;
        for (char c : trimmed) depth += c == '(' ? 1 : (c == ')' ? -1 : 0);
        char last = trimmed.empty() ? '+' : trimmed.back();
        bool continues = depth > 0 || last == '+' || last == '-' || last == '*' || last == '^' || last == '/' || last == '(';
        if (!continues) {
            bodies.push_back({pending_line, pending});
            pending.clear();
            depth = 0;
        }
    }
    if (!pending.empty()) throw MmError(ErrorCode::ParseError, std::to_string(pending_line) + ":1: unterminated polynomial");
    if (file.vars.empty()) throw MmError(ErrorCode::ParseError, "missing 'vars:' header");
    auto names = file.all_names();
    for (const auto& [ln, body] : bodies) {
        try {
            file.polys.push_back(parse_poly(body, names));
        } catch (const MmError& e) {
            throw MmError(ErrorCode::ParseError, "line " + std::to_string(ln) + ", " + e.detail());
        }
    }
    return file;
}

PolyFile load_poly_file(const std::string& path) { return parse_poly_file(read_text_file(path)); }

}  // namespace mmc
