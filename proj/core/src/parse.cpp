#include "qhopf/parse.hpp"

#include <cctype>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

/// One token ahead suffices for this grammar.
class Parser {
public:
    Parser(const std::string& text, const Presentation* P, FieldTag field)
        : text_(text), pres_(P), field_(field) {}

    NcPoly parse_poly() {
        NcPoly x = parse_term();
        skip_ws();
        while (peek() == '+' || peek() == '-') {
            char op = take();
            NcPoly t = parse_term();
            if (op == '+')
                x += t;
            else
                x -= t;
            skip_ws();
        }
        expect_end();
        return pres_->normal_form(x);
    }

    FieldElement parse_scalar_expr() {
        NcPoly x = parse_term();
        skip_ws();
        while (peek() == '+' || peek() == '-') {
            char op = take();
            NcPoly t = parse_term();
            if (op == '+')
                x += t;
            else
                x -= t;
            skip_ws();
        }
        expect_end();
        for (const auto& [w, c] : x.terms())
            if (!w.empty()) throw parse_error(0, "expected a scalar expression");
        return x.coeff(Word::one());
    }

private:
    NcPoly parse_term() {
        NcPoly x = parse_factor();
        skip_ws();
        while (peek() == '*') {
            take();
            NcPoly f = parse_factor();
            x = pres_->multiply(x, f);
            skip_ws();
        }
        return x;
    }

    NcPoly parse_factor() {
        NcPoly a = parse_atom();
        skip_ws();
        if (peek() == '^') {
            take();
            std::size_t at = pos_;
            long e = parse_int();
            if (e < 0) {
                // negative powers exist for q and for invertible generators;
                // parse_atom already produced those as units when possible
                if (!last_atom_invertible_)
                    throw parse_error(at, "negative exponent on a non-invertible factor");
            }
            if (last_atom_invertible_ && e < 0) {
                a = last_atom_inverse_;
                e = -e;
            }
            NcPoly acc = NcPoly::unit(pres_);
            for (long i = 0; i < e; ++i) acc = pres_->multiply(acc, a);
            return acc;
        }
        return a;
    }

    NcPoly parse_atom() {
        skip_ws();
        last_atom_invertible_ = false;
        std::size_t at = pos_;
        char ch = peek();
        if (ch == '(') {
            take();
            NcPoly inner = parse_term();
            skip_ws();
            while (peek() == '+' || peek() == '-') {
                char op = take();
                NcPoly t = parse_term();
                if (op == '+')
                    inner += t;
                else
                    inner -= t;
                skip_ws();
            }
            if (peek() != ')') throw parse_error(pos_, "expected ')'");
            take();
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
            long num = parse_int();
            if (peek() == '/') {
                take();
                std::size_t dat = pos_;
                long den = parse_int();
                if (den <= 0) throw parse_error(dat, "denominator must be a positive integer");
                return NcPoly::unit(pres_, FieldElement::from_rational(Rational(num, den)));
            }
            return NcPoly::unit(pres_, FieldElement::from_int(num));
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::string name = parse_name();
            // scalar symbols first
            if (name == "q" || name == "p" || name == "mu" || name == "nu" || name == "t") {
                if (name == "t") {
                    if (field_ == FieldTag::QqMuNuT) {
                        last_atom_invertible_ = true;
                        last_atom_inverse_ = NcPoly::unit(pres_, FieldElement::t().inverse());
                        return NcPoly::unit(pres_, FieldElement::t());
                    }
                    if (field_ == FieldTag::QqMu) {
                        // t stands for mu in the mu = nu field
                        last_atom_invertible_ = true;
                        last_atom_inverse_ =
                            NcPoly::unit(pres_, FieldElement::variable(Var::mu).inverse());
                        return NcPoly::unit(pres_, FieldElement::variable(Var::mu));
                    }
                    throw parse_error(at, "symbol t is not available in field " +
                                              std::string(field_tag_name(field_)));
                }
                Var v = name == "q" ? Var::q : name == "p" ? Var::p : name == "mu" ? Var::mu : Var::nu;
                if (!field_allows(field_, v))
                    throw parse_error(at, "symbol " + name + " is not available in field " +
                                              std::string(field_tag_name(field_)));
                last_atom_invertible_ = v == Var::q;  // negative exponents only on q
                if (last_atom_invertible_)
                    last_atom_inverse_ = NcPoly::unit(pres_, FieldElement::q_power(-1));
                return NcPoly::unit(pres_, FieldElement::variable(v));
            }
            auto g = pres_->find_generator(name);
            if (!g) throw parse_error(at, "unknown generator '" + name + "'");
            const Generator& gen = pres_->generator(*g);
            if (gen.invertible && gen.inverse) {
                last_atom_invertible_ = true;
                last_atom_inverse_ = NcPoly::from_word(pres_, Word::letter(*gen.inverse));
            }
            return NcPoly::from_word(pres_, Word::letter(*g));
        }
        throw parse_error(pos_, ch == '\0' ? "unexpected end of input" : "unexpected character");
    }

    std::string parse_name() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    long parse_int() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            take();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error(pos_, "expected an integer");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (take() - '0');
        (void)start;
        return neg ? -v : v;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    void expect_end() {
        skip_ws();
        if (pos_ != text_.size()) throw parse_error(pos_, "unexpected trailing input");
    }

    const std::string& text_;
    const Presentation* pres_;
    FieldTag field_;
    std::size_t pos_ = 0;
    bool last_atom_invertible_ = false;
    NcPoly last_atom_inverse_;
};

}  // namespace

NcPoly parse_expression(const std::string& text, const Presentation& P) {
    Parser parser(text, &P, P.field());
    return parser.parse_poly();
}

FieldElement parse_scalar(const std::string& text, FieldTag field) {
    static const PresentationPtr empty = [] {
        auto p = std::make_shared<Presentation>("scalars", FieldTag::QqMuNuT);
        p->finalize();
        return p;
    }();
    Parser parser(text, empty.get(), field);
    return parser.parse_scalar_expr();
}

}  // namespace qhopf
