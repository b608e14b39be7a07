#include "k3lat/lattice_expr.hpp"

#include <cctype>
#include <vector>

namespace k3lat {

ParseError::ParseError(const std::string& what, std::size_t position)
    : DomainError(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    IntLattice parse() {
        std::vector<IntLattice> parts;
        term(parts);
        skip();
        while (pos_ < text_.size()) {
            expect('+');
            term(parts);
            skip();
        }
        if (parts.size() == 1) return parts.front();
        return direct_sum(parts);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        if (!peek(c)) {
            if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    bool at_digit() {
        skip();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    long integer() {
        skip();
        const std::size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
            skip();
        }
        if (!at_digit()) throw ParseError("expected an integer", pos_);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > 100000000L) throw ParseError("integer too large", start);
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    void term(std::vector<IntLattice>& parts) {
        long mult = 1;
        if (at_digit()) {
            const std::size_t at = pos_;
            mult = integer();
            if (mult < 1) throw ParseError("multiplicity must be positive", at);
        }
        IntLattice a = atom();
        for (long k = 0; k < mult; ++k) parts.push_back(a);
    }

    IntLattice atom() {
        skip();
        if (pos_ >= text_.size()) throw ParseError("expected a lattice atom but input ended", pos_);
        const std::size_t at = pos_;
        const char c = text_[pos_++];
        IntLattice base = [&]() -> IntLattice {
            try {
                switch (c) {
                case 'U':
                    return named::U();
                case 'A':
                case 'D': {
                    expect('(');
                    const long n = integer();
                    expect(')');
                    return c == 'A' ? named::A(n) : named::D(n);
                }
                case 'E': {
                    const long n = integer();
                    return named::E(n);
                }
                case '<': {
                    const long k = integer();
                    expect('>');
                    return named::rank_one(k);
                }
                default:
                    throw ParseError(std::string("unknown lattice atom '") + c + "'", at);
                }
            } catch (const ParseError&) {
                throw;
            } catch (const DomainError& e) {
                throw ParseError(std::string("invalid parameter: ") + e.what(), at);
            }
        }();
        if (peek('(')) {
            ++pos_;
            const std::size_t tat = pos_;
            const long t = integer();
            expect(')');
            if (t == 0) throw ParseError("scaling factor must be nonzero", tat);
            return rescale(base, Int(t));
        }
        return base;
    }
};

} // namespace

IntLattice parse_lattice_expr(std::string_view text) { return Parser(text).parse(); }

} // namespace k3lat
