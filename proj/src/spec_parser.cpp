#include "cdlat/spec_parser.hpp"

#include <cctype>

namespace cdlat {

namespace {

bool is_ident_char(char c) {
    // 'x' is the product separator and never part of a name
    return c != 'x' && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
}

class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    std::size_t pos() const { return pos_; }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void advance() { ++pos_; }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c))
            throw invalid_spec(std::string("expected '") + c + "'", pos_);
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        if (pos_ == start) throw invalid_spec("expected a group atom", pos_);
        return text_.substr(start, pos_ - start);
    }

    int integer() {
        skip_ws();
        std::size_t start = pos_;
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000) throw invalid_spec("integer too large", start);
            ++pos_;
        }
        if (pos_ == start) throw invalid_spec("expected an integer", pos_);
        return static_cast<int>(v);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

// "C12" -> (C, 12); returns false when the token is not letters+digits
bool split_prefix(const std::string& tok, std::string& letters, int& number) {
    std::size_t i = 0;
    while (i < tok.size() && std::isalpha(static_cast<unsigned char>(tok[i]))) ++i;
    if (i == 0 || i == tok.size()) return false;
    long long v = 0;
    for (std::size_t j = i; j < tok.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(tok[j]))) return false;
        v = v * 10 + (tok[j] - '0');
        if (v > 1000000) return false;
    }
    letters = tok.substr(0, i);
    number = static_cast<int>(v);
    return true;
}

GroupSpec::Atom parse_term(Scanner& sc) {
    std::size_t at = sc.pos();
    std::string tok = sc.ident();

    if (tok == "SDP") {
        GroupSpec::Atom atom;
        atom.kind = GroupSpec::Atom::Sdp;
        sc.expect('(');
        atom.a = sc.integer();
        sc.expect(',');
        atom.b = sc.integer();
        sc.expect(',');
        atom.c = sc.integer();
        sc.expect(')');
        if (atom.a < 1 || atom.b < 1 || atom.c < 1)
            throw invalid_spec("SDP parameters must be positive", at);
        return atom;
    }

    std::string letters;
    int number = 0;
    if (split_prefix(tok, letters, number)) {
        GroupSpec::Atom atom;
        if (letters == "C") {
            if (number < 1) throw invalid_spec("cyclic order must be >= 1", at);
            atom.kind = GroupSpec::Atom::Cyclic;
            atom.a = number;
            return atom;
        }
        if (letters == "Dic") {
            if (number < 1) throw invalid_spec("dicyclic parameter must be >= 1", at);
            atom.kind = GroupSpec::Atom::Dicyclic;
            atom.a = number;
            return atom;
        }
        if (letters == "D") {
            if (number < 2 || number % 2 != 0)
                throw invalid_spec("dihedral order must be a positive even integer", at);
            atom.kind = GroupSpec::Atom::Dihedral;
            atom.a = number;
            return atom;
        }
        if (letters == "Q") {
            if (number % 4 != 0 || number < 4)
                throw invalid_spec("Q<n> requires n to be a positive multiple of 4", at);
            atom.kind = GroupSpec::Atom::Dicyclic;
            atom.a = number / 4;
            return atom;
        }
    }

    GroupSpec::Atom atom;
    atom.kind = GroupSpec::Atom::Named;
    atom.name = tok;
    return atom;
}

}  // namespace

std::string GroupSpec::Atom::canonical() const {
    switch (kind) {
        case Cyclic: return "C" + std::to_string(a);
        case Dihedral: return "D" + std::to_string(a);
        case Dicyclic: {
            int order = 4 * a;
            bool pow2 = (order & (order - 1)) == 0;
            return pow2 ? "Q" + std::to_string(order) : "Dic" + std::to_string(a);
        }
        case Sdp:
            return "SDP(" + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(c) + ")";
        default: return name;
    }
}

std::string GroupSpec::canonical() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "x";
        out += factors[i].canonical();
    }
    return out;
}

GroupSpec parse_spec(const std::string& text) {
    Scanner sc(text);
    GroupSpec spec;
    spec.factors.push_back(parse_term(sc));
    while (!sc.eof()) {
        std::size_t at = sc.pos();
        if (!sc.consume('x')) throw invalid_spec("expected 'x' or end of spec", at);
        spec.factors.push_back(parse_term(sc));
    }
    return spec;
}

Group build_group(const GroupSpec& spec, const NamedBuilders& named, int max_order) {
    auto build_atom = [&](const GroupSpec::Atom& atom) -> Group {
        switch (atom.kind) {
            case GroupSpec::Atom::Cyclic: return make_cyclic(atom.a, max_order);
            case GroupSpec::Atom::Dihedral: return make_dihedral(atom.a, max_order);
            case GroupSpec::Atom::Dicyclic: return make_dicyclic(atom.a, max_order);
            case GroupSpec::Atom::Sdp:
                return semidirect_cyclic(atom.a, atom.b, atom.c, max_order);
            default: {
                auto it = named.find(atom.name);
                if (it == named.end())
                    throw invalid_parameter("unknown group name: " + atom.name);
                Group g = it->second(max_order);
                g.set_label(atom.name);
                return g;
            }
        }
    };

    Group result = build_atom(spec.factors.front());
    for (std::size_t i = 1; i < spec.factors.size(); ++i)
        result = direct_product(result, build_atom(spec.factors[i]), max_order);
    return result;
}

}  // namespace cdlat
