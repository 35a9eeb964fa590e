#include "hilbert/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>

namespace hilbert {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line),
      column_(column)
{
}

ExponentVector ProblemFile::bound() const
{
    if (const auto* raw = std::get_if<RawSeries>(&target))
        return raw->series.bound();
    return determineBound(std::get<ModuleExpr>(target));
}

TruncatedSeries ProblemFile::series() const
{
    if (const auto* raw = std::get_if<RawSeries>(&target))
        return raw->series;
    const auto& m = std::get<ModuleExpr>(target);
    return seriesOf(m, determineBound(m));
}

namespace {

enum class Tok { ident, integer, equals, lparen, rparen, comma, semi, caret, star, plus, directSum, minus, newline, end };

struct Token
{
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    int depth = 0;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string text, int c) { out.push_back({k, std::move(text), line, c}); };
    while (i < src.size()) {
        const char ch = src[i];
        const int startCol = col;
        if (ch == '\n') {
            if (depth == 0)
                push(Tok::newline, "\\n", startCol);
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (ch == '#') {
            while (i < src.size() && src[i] != '\n')
                ++i, ++col;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i, ++col;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            push(Tok::ident, std::string(src.substr(i, j - i)), startCol);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            push(Tok::integer, std::string(src.substr(i, j - i)), startCol);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (src.substr(i, 3) == "(+)") {
            push(Tok::directSum, "(+)", startCol);
            i += 3, col += 3;
            continue;
        }
        Tok k;
        switch (ch) {
        case '=': k = Tok::equals; break;
        case '(': k = Tok::lparen; ++depth; break;
        case ')': k = Tok::rparen; depth = std::max(0, depth - 1); break;
        case ',': k = Tok::comma; break;
        case ';': k = Tok::semi; break;
        case '^': k = Tok::caret; break;
        case '*': k = Tok::star; break;
        case '+': k = Tok::plus; break;
        case '-': k = Tok::minus; break;
        default:
            throw ParseError(std::string("unexpected character '") + ch + "'", line, startCol);
        }
        push(k, std::string(1, ch), startCol);
        ++i, ++col;
    }
    out.push_back({Tok::end, "end of input", line, col});
    return out;
}

const std::set<std::string> kReserved{"vars", "g", "series", "M", "R", "ideal", "quot", "shift"};

class Parser
{
  public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    ProblemFile parse()
    {
        std::optional<ModuleExpr> module;
        std::optional<ExponentVector> bound;
        std::optional<std::vector<std::pair<ExponentVector, TruncatedSeries::Coefficient>>> series;
        const Token* seriesTok = nullptr;

        for (;;) {
            skipSeparators();
            if (peek().kind == Tok::end)
                break;
            const Token& name = expect(Tok::ident, "statement name");
            expect(Tok::equals, "'='");
            if (name.text == "vars") {
                if (haveVars_)
                    fail("variables declared twice", name);
                parseVars();
            } else {
                if (!haveVars_)
                    fail("'vars' must be declared first", name);
                if (name.text == "g") {
                    if (bound)
                        fail("bound declared twice", name);
                    bound = parseIntVector();
                    if (bound->size() != n())
                        fail("bound has " + std::to_string(bound->size()) + " entries, expected " +
                                 std::to_string(n()),
                             name);
                } else if (name.text == "series") {
                    if (series)
                        fail("series declared twice", name);
                    seriesTok = &name;
                    series = parsePolynomial();
                } else if (name.text == "M") {
                    if (module)
                        fail("module declared twice", name);
                    module = parseModule();
                } else {
                    if (kReserved.contains(name.text) || isVariable(name.text))
                        fail("'" + name.text + "' cannot be bound", name);
                    if (findBinding(name.text))
                        fail("'" + name.text + "' bound twice", name);
                    out_.bindings.emplace_back(name.text, parseIdealDefinition());
                }
            }
            endStatement();
        }

        if (!haveVars_)
            fail("missing 'vars' declaration", peek());
        if (module && (bound || series))
            fail("a problem has either 'M' or 'g' and 'series', not both", peek());
        if (module) {
            out_.target = std::move(*module);
        } else if (bound && series) {
            TruncatedSeries h(*bound);
            for (const auto& [a, c] : *series) {
                if (!leq(a, *bound))
                    fail("series monomial lies above the bound g", *seriesTok);
                h.add(a, c);
            }
            out_.target = RawSeries{std::move(h)};
        } else if (bound || series) {
            fail("raw mode needs both 'g' and 'series'", peek());
        } else {
            fail("missing target: give 'M' or 'g' and 'series'", peek());
        }
        return std::move(out_);
    }

  private:
    std::size_t n() const { return out_.variableNames.size(); }

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
    bool accept(Tok k)
    {
        if (peek().kind != k)
            return false;
        next();
        return true;
    }

    [[noreturn]] void fail(const std::string& msg, const Token& at) const { throw ParseError(msg, at.line, at.column); }

    const Token& expect(Tok k, const std::string& what)
    {
        if (peek().kind == Tok::minus)
            fail("negative numbers are not allowed", peek());
        if (peek().kind != k)
            fail("expected " + what + ", found '" + peek().text + "'", peek());
        return next();
    }

    void skipSeparators()
    {
        while (peek().kind == Tok::newline || peek().kind == Tok::semi)
            next();
    }

    void endStatement()
    {
        if (peek().kind == Tok::newline || peek().kind == Tok::semi || peek().kind == Tok::end)
            return;
        if (peek().kind == Tok::minus)
            fail("negative numbers are not allowed", peek());
        fail("unexpected '" + peek().text + "'", peek());
    }

    bool atStatementEnd() const
    {
        const Tok k = peek().kind;
        return k == Tok::newline || k == Tok::semi || k == Tok::end;
    }

    bool isVariable(const std::string& s) const
    {
        return std::find(out_.variableNames.begin(), out_.variableNames.end(), s) != out_.variableNames.end();
    }

    const MonomialIdeal* findBinding(const std::string& s) const
    {
        for (const auto& [name, ideal] : out_.bindings)
            if (name == s)
                return &ideal;
        return nullptr;
    }

    void parseVars()
    {
        while (!atStatementEnd()) {
            const Token& t = expect(Tok::ident, "variable name");
            if (kReserved.contains(t.text))
                fail("'" + t.text + "' is reserved", t);
            if (isVariable(t.text))
                fail("variable '" + t.text + "' declared twice", t);
            out_.variableNames.push_back(t.text);
        }
        if (out_.variableNames.empty())
            fail("at least one variable is required", peek());
        haveVars_ = true;
    }

    int parseInt()
    {
        const Token& t = expect(Tok::integer, "integer");
        int v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || v > kMaxBoundCoordinate)
            fail("integer out of range", t);
        return v;
    }

    ExponentVector parseIntVector()
    {
        std::vector<int> v;
        while (!atStatementEnd() && peek().kind != Tok::rparen)
            v.push_back(parseInt());
        return ExponentVector(std::move(v));
    }

    // monomial := '1' | factor ('*' factor)*   factor := ident ['^' int]
    ExponentVector parseMonomial()
    {
        ExponentVector e = ExponentVector::zero(n());
        if (peek().kind == Tok::integer) {
            const Token& t = next();
            if (t.text != "1")
                fail("expected a monomial", t);
            return e;
        }
        for (;;) {
            const Token& v = expect(Tok::ident, "variable");
            const auto it = std::find(out_.variableNames.begin(), out_.variableNames.end(), v.text);
            if (it == out_.variableNames.end())
                fail("undeclared variable '" + v.text + "'", v);
            int power = 1;
            if (accept(Tok::caret))
                power = parseInt();
            const auto idx = static_cast<std::size_t>(it - out_.variableNames.begin());
            e.set(idx, e[idx] + power);
            if (!accept(Tok::star))
                break;
        }
        return e;
    }

    // term := int | [int '*'] monomial
    std::vector<std::pair<ExponentVector, TruncatedSeries::Coefficient>> parsePolynomial()
    {
        std::vector<std::pair<ExponentVector, TruncatedSeries::Coefficient>> terms;
        do {
            TruncatedSeries::Coefficient c = 1;
            if (peek().kind == Tok::integer) {
                const Token& t = next();
                std::uint64_t v = 0;
                auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
                if (ec != std::errc())
                    fail("coefficient out of range", t);
                if (!accept(Tok::star)) {
                    terms.emplace_back(ExponentVector::zero(n()), v);
                    continue;
                }
                c = v;
            }
            terms.emplace_back(parseMonomial(), c);
        } while (accept(Tok::plus));
        return terms;
    }

    MonomialIdeal parseIdealBody()
    {
        expect(Tok::lparen, "'('");
        std::vector<ExponentVector> gens;
        if (peek().kind != Tok::rparen) {
            do
                gens.push_back(parseMonomial());
            while (accept(Tok::comma));
        }
        expect(Tok::rparen, "')'");
        return MonomialIdeal(n(), std::move(gens));
    }

    MonomialIdeal parseIdealDefinition()
    {
        if (peek().kind == Tok::integer && peek().text == "0") {
            next();
            return MonomialIdeal::zero(n());
        }
        const Token& t = expect(Tok::ident, "'ideal(...)' or 0");
        if (t.text != "ideal")
            fail("expected 'ideal(...)' or 0", t);
        return parseIdealBody();
    }

    // ideal reference inside quot(...): NAME | R | 0 | ideal(...)
    MonomialIdeal parseIdealRef()
    {
        if (peek().kind == Tok::integer && peek().text == "0") {
            next();
            return MonomialIdeal::zero(n());
        }
        const Token& t = expect(Tok::ident, "ideal");
        if (t.text == "ideal")
            return parseIdealBody();
        if (t.text == "R")
            return MonomialIdeal::unit(n());
        if (const auto* ideal = findBinding(t.text))
            return *ideal;
        fail("unknown ideal '" + t.text + "'", t);
    }

    ModuleExpr parseModule()
    {
        ModuleExpr m(n());
        do
            for (auto& t : parseModuleTerm())
                m.add(std::move(t));
        while (accept(Tok::directSum));
        return m;
    }

    std::vector<ModuleTerm> parseModuleTerm()
    {
        std::vector<ModuleTerm> base;
        const ExponentVector origin = ExponentVector::zero(n());
        const Token& t = peek();
        if (t.kind == Tok::integer && t.text == "0") {
            next();
        } else {
            expect(Tok::ident, "module term");
            if (t.text == "R") {
                base.push_back(FreeTerm{origin});
            } else if (t.text == "ideal") {
                base.push_back(QuotientTerm{parseIdealBody(), MonomialIdeal::zero(n()), origin});
            } else if (t.text == "quot") {
                expect(Tok::lparen, "'('");
                MonomialIdeal num = parseIdealRef();
                expect(Tok::comma, "','");
                const Token& denTok = peek();
                MonomialIdeal den = parseIdealRef();
                expect(Tok::rparen, "')'");
                if (!num.containsIdeal(den))
                    fail("quotient denominator is not contained in the numerator", denTok);
                base.push_back(QuotientTerm{std::move(num), std::move(den), origin});
            } else if (t.text == "shift") {
                expect(Tok::lparen, "'('");
                auto inner = parseModuleTerm();
                expect(Tok::semi, "';'");
                const Token& at = peek();
                const ExponentVector by = parseIntVector();
                if (by.size() != n())
                    fail("shift has " + std::to_string(by.size()) + " entries, expected " + std::to_string(n()), at);
                expect(Tok::rparen, "')'");
                for (auto& term : inner) {
                    std::visit([&](auto& x) { x.shift = x.shift + by; }, term);
                    base.push_back(std::move(term));
                }
            } else if (const auto* ideal = findBinding(t.text)) {
                base.push_back(QuotientTerm{*ideal, MonomialIdeal::zero(n()), origin});
            } else {
                fail("unknown module term '" + t.text + "'", t);
            }
        }
        int multiplicity = 1;
        if (accept(Tok::caret))
            multiplicity = parseInt();
        std::vector<ModuleTerm> out;
        for (int k = 0; k < multiplicity; ++k)
            out.insert(out.end(), base.begin(), base.end());
        return out;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    bool haveVars_ = false;
    ProblemFile out_;
};

std::string formatIdeal(const MonomialIdeal& ideal, const std::vector<std::string>& names)
{
    if (ideal.isZero())
        return "0";
    std::string s = "ideal(";
    for (std::size_t i = 0; i < ideal.generators().size(); ++i)
        s += (i ? ", " : "") + formatMonomial(ideal.generators()[i], names);
    return s + ")";
}

std::string formatIntVector(const ExponentVector& a)
{
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (i ? " " : "") + std::to_string(a[i]);
    return s;
}

} // namespace

ProblemFile parseProblem(std::string_view text)
{
    Parser parser(tokenize(text));
    try {
        return parser.parse();
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(e.what(), 0, 0);
    }
}

std::string formatMonomial(const ExponentVector& a, const std::vector<std::string>& names)
{
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += i < names.size() ? names[i] : "X" + std::to_string(i + 1);
        if (a[i] > 1)
            s += '^' + std::to_string(a[i]);
    }
    return s.empty() ? "1" : s;
}

std::string printProblem(const ProblemFile& p)
{
    std::ostringstream os;
    os << "vars =";
    for (const auto& v : p.variableNames)
        os << ' ' << v;
    os << '\n';
    for (const auto& [name, ideal] : p.bindings)
        os << name << " = " << formatIdeal(ideal, p.variableNames) << '\n';
    if (const auto* raw = std::get_if<RawSeries>(&p.target)) {
        os << "g = " << formatIntVector(raw->series.bound()) << '\n';
        os << "series = ";
        if (raw->series.isZero())
            os << "0";
        bool first = true;
        for (const auto& [a, c] : raw->series.terms()) {
            os << (first ? "" : " + ");
            if (c != 1)
                os << c << '*';
            os << formatMonomial(a, p.variableNames);
            first = false;
        }
        os << '\n';
        return os.str();
    }
    const auto& m = std::get<ModuleExpr>(p.target);
    os << "M = ";
    if (m.terms().empty())
        os << "0";
    bool first = true;
    for (const auto& term : m.terms()) {
        os << (first ? "" : " (+) ");
        first = false;
        std::string body;
        ExponentVector shift = ExponentVector::zero(p.dimension());
        if (const auto* f = std::get_if<FreeTerm>(&term)) {
            body = "R";
            shift = f->shift;
        } else {
            const auto& q = std::get<QuotientTerm>(term);
            body = "quot(" + formatIdeal(q.numerator, p.variableNames) + ", " +
                   formatIdeal(q.denominator, p.variableNames) + ")";
            shift = q.shift;
        }
        if (shift == ExponentVector::zero(p.dimension()))
            os << body;
        else
            os << "shift(" << body << "; " << formatIntVector(shift) << ")";
    }
    os << '\n';
    return os.str();
}

} // namespace hilbert
