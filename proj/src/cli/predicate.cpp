#include "crnv/predicate.hpp"

#include "crnv/errors.hpp"

#include <cctype>

namespace crnv {

namespace {

std::string lower(std::string_view s)
{
    std::string out(s);
    for (auto& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

SpeciesId resolve(const Network& network, std::string_view name)
{
    if (auto id = network.find_species(name)) {
        return *id;
    }
    std::optional<SpeciesId> found;
    for (const auto& s : network.species()) {
        if (lower(s.name) == lower(name)) {
            if (found) {
                throw SchemaError("species name \"" + std::string(name) + "\" is ambiguous");
            }
            found = s.id;
        }
    }
    if (!found) {
        throw SchemaError("predicate references unknown species \"" + std::string(name) + "\"");
    }
    return *found;
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool done()
    {
        skip_space();
        return pos_ == text_.size();
    }

    std::string_view identifier()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a species name");
        }
        return text_.substr(start, pos_ - start);
    }

    Predicate::Op op()
    {
        skip_space();
        auto rest = text_.substr(pos_);
        auto take = [&](std::string_view tok, Predicate::Op o) -> std::optional<Predicate::Op> {
            if (rest.substr(0, tok.size()) == tok) {
                pos_ += tok.size();
                return o;
            }
            return std::nullopt;
        };
        for (auto [tok, o] : {std::pair{"==", Predicate::Op::Eq}, {"!=", Predicate::Op::Ne},
                              {"<=", Predicate::Op::Le}, {">=", Predicate::Op::Ge},
                              {"=", Predicate::Op::Eq}, {"<", Predicate::Op::Lt}, {">", Predicate::Op::Gt}}) {
            if (auto r = take(tok, o)) {
                return *r;
            }
        }
        fail("expected a comparison operator");
    }

    std::string_view number()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a nonnegative integer");
        }
        return text_.substr(start, pos_ - start);
    }

    void conjunction()
    {
        skip_space();
        if (text_.substr(pos_, 2) == "&&") {
            pos_ += 2;
        } else if (pos_ < text_.size() && text_[pos_] == '&') {
            ++pos_;
        } else {
            fail("expected '&&'");
        }
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw SchemaError("predicate \"" + std::string(text_) + "\": " + what + " at offset " +
                          std::to_string(pos_));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Predicate Predicate::parse(const Network& network, std::string_view text)
{
    Predicate p;
    p.text_ = std::string(text);
    Lexer lex(text);
    while (true) {
        Comparison c;
        c.species = resolve(network, lex.identifier());
        c.op = lex.op();
        c.value = parse_count(lex.number());
        p.terms_.push_back(std::move(c));
        if (lex.done()) {
            break;
        }
        lex.conjunction();
    }
    return p;
}

bool Predicate::operator()(const State& state) const
{
    for (const auto& c : terms_) {
        const Count& v = state[c.species];
        bool ok = false;
        switch (c.op) {
        case Op::Eq: ok = v == c.value; break;
        case Op::Ne: ok = v != c.value; break;
        case Op::Lt: ok = v < c.value; break;
        case Op::Le: ok = v <= c.value; break;
        case Op::Gt: ok = v > c.value; break;
        case Op::Ge: ok = v >= c.value; break;
        }
        if (!ok) {
            return false;
        }
    }
    return true;
}

} // namespace crnv
