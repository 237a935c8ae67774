#include "lch/format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace lch {

std::string Diagnostic::to_string() const
{
    std::ostringstream os;
    os << line << ':' << column << ": " << message;
    return os.str();
}

namespace {

std::string join(const std::vector<Diagnostic>& ds)
{
    std::string out;
    for (const auto& d : ds) {
        if (!out.empty())
            out += '\n';
        out += d.to_string();
    }
    return out;
}

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error(join(diagnostics)), diagnostics_(std::move(diagnostics))
{
}

VerificationError::VerificationError(std::vector<Diagnostic> diagnostics)
    : Error(join(diagnostics)), diagnostics_(std::move(diagnostics))
{
}

namespace {

struct PolyError {
    std::size_t column;  // 0-based within the polynomial text
    std::string message;
};

enum class TokKind { Int, Ident, Star, Caret, Plus, Minus, End };

struct Tok {
    TokKind kind;
    std::string text;
    std::size_t col;
};

std::vector<Tok> lex_poly(std::string_view s)
{
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            out.push_back({TokKind::Int, std::string(s.substr(start, i - start)), start});
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({TokKind::Ident, std::string(s.substr(start, i - start)), start});
        } else {
            TokKind k;
            switch (c) {
            case '*': k = TokKind::Star; break;
            case '^': k = TokKind::Caret; break;
            case '+': k = TokKind::Plus; break;
            case '-': k = TokKind::Minus; break;
            default: throw PolyError{start, std::string("unexpected character '") + c + "'"};
            }
            out.push_back({k, std::string(1, c), start});
            ++i;
        }
    }
    out.push_back({TokKind::End, "", s.size()});
    return out;
}

NcPoly parse_poly_impl(std::string_view text, const AlgebraPtr& algebra)
{
    const auto& ring = algebra->ring();
    auto toks = lex_poly(text);
    std::size_t p = 0;
    auto peek = [&]() -> const Tok& { return toks[p]; };
    auto next = [&]() -> const Tok& { return toks[p++]; };

    NcPoly out(algebra);
    if (peek().kind == TokKind::End)
        throw PolyError{0, "empty polynomial"};

    bool negative = false;
    if (peek().kind == TokKind::Minus || peek().kind == TokKind::Plus)
        negative = next().kind == TokKind::Minus;

    while (true) {
        mpz_class coeff = 1;
        Exponent exponent(ring.h1_rank(), 0);
        Word word;
        bool expect_factor = true;
        if (peek().kind == TokKind::Int) {
            coeff = mpz_class(next().text);
            if (peek().kind == TokKind::Star)
                next();
            else
                expect_factor = false;
        }
        while (expect_factor) {
            const Tok& t = next();
            if (t.kind != TokKind::Ident)
                throw PolyError{t.col, t.kind == TokKind::End ? "expected a factor at end of polynomial"
                                                              : "expected a factor, found '" + t.text + "'"};
            if (auto v = ring.h1_index(t.text)) {
                long long power = 1;
                if (peek().kind == TokKind::Caret) {
                    next();
                    bool neg = false;
                    if (peek().kind == TokKind::Minus) {
                        next();
                        neg = true;
                    }
                    const Tok& e = next();
                    if (e.kind != TokKind::Int)
                        throw PolyError{e.col, "expected an integer exponent"};
                    if (e.text.size() > 9)
                        throw PolyError{e.col, "exponent too large"};
                    power = std::stoll(e.text) * (neg ? -1 : 1);
                }
                exponent[*v] += static_cast<int>(power);
            } else if (auto g = algebra->find(t.text)) {
                if (peek().kind == TokKind::Caret)
                    throw PolyError{peek().col, "generator '" + t.text + "' cannot carry an exponent"};
                word.push_back(*g);
            } else {
                throw PolyError{t.col, "unknown identifier '" + t.text + "'"};
            }
            if (peek().kind != TokKind::Star)
                break;
            next();
        }
        if (word.size() > algebra->max_word_length())
            throw PolyError{peek().col, "word longer than the cap of " + std::to_string(algebra->max_word_length())};
        if (negative)
            coeff = -coeff;
        out.add_term(word, GroupRingElem::monomial(ring, exponent, coeff));

        const Tok& t = next();
        if (t.kind == TokKind::End)
            break;
        if (t.kind != TokKind::Plus && t.kind != TokKind::Minus)
            throw PolyError{t.col, "expected '+' or '-', found '" + t.text + "'"};
        negative = t.kind == TokKind::Minus;
    }
    return out;
}

struct Line {
    std::size_t number;
    std::string text;  // comment stripped
};

struct Field {
    std::string text;
    std::size_t col;  // 1-based
};

std::vector<Field> split_fields(const std::string& s)
{
    std::vector<Field> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
        if (i >= s.size())
            break;
        std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
        out.push_back({s.substr(start, i - start), start + 1});
    }
    return out;
}

std::optional<long long> to_int(const std::string& s)
{
    if (s.empty() || s.size() > 12)
        return std::nullopt;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return std::nullopt;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            return std::nullopt;
    return std::stoll(s);
}

struct PendingD {
    std::size_t line;
    std::size_t name_col;
    std::size_t poly_col;
    std::string name;
    std::string poly;
};

}  // namespace

NcPoly parse_poly(std::string_view text, const AlgebraPtr& algebra)
{
    try {
        return parse_poly_impl(text, algebra);
    } catch (const PolyError& e) {
        throw ParseError({{1, e.column + 1, e.message}});
    }
}

DgaDocument parse_dga_document(std::string_view text, const ParseOptions& opts)
{
    std::vector<Line> lines;
    {
        std::size_t number = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos)
                end = text.size();
            std::string s(text.substr(start, end - start));
            ++number;
            if (auto hash = s.find('#'); hash != std::string::npos)
                s.erase(hash);
            if (!s.empty() && s.back() == '\r')
                s.pop_back();
            lines.push_back({number, std::move(s)});
            if (end == text.size())
                break;
            start = end + 1;
        }
    }

    std::vector<Diagnostic> diags;
    std::optional<unsigned> characteristic;
    std::size_t ring_line = 0;
    std::optional<std::vector<std::string>> h1_names;
    std::vector<Generator> gens;
    std::vector<std::size_t> gen_lines;
    std::vector<PendingD> pending;

    for (const auto& line : lines) {
        auto f = split_fields(line.text);
        if (f.empty())
            continue;
        const std::string& kw = f[0].text;
        auto err = [&](std::size_t col, std::string msg) { diags.push_back({line.number, col, std::move(msg)}); };
        if (kw == "ring") {
            if (characteristic) {
                err(f[0].col, "duplicate ring line (first at line " + std::to_string(ring_line) + ")");
                continue;
            }
            if (f.size() != 2) {
                err(f[0].col, "expected 'ring Z' or 'ring F<p>'");
                continue;
            }
            const auto& r = f[1].text;
            if (r == "Z") {
                characteristic = 0;
            } else if (r.size() > 1 && r[0] == 'F' && to_int(r.substr(1)) && r[1] != '-' && r[1] != '+') {
                long long p = *to_int(r.substr(1));
                if (!is_prime(static_cast<std::uint64_t>(p)) || p > static_cast<long long>(FiniteField::kMaxOrder)) {
                    err(f[1].col, "field order " + r.substr(1) + " is not a supported prime");
                    continue;
                }
                characteristic = static_cast<unsigned>(p);
            } else {
                err(f[1].col, "unknown coefficient ring '" + r + "'");
                continue;
            }
            ring_line = line.number;
        } else if (kw == "h1") {
            if (h1_names) {
                err(f[0].col, "duplicate h1 line");
                continue;
            }
            if (f.size() < 3 || f[1].text != "rank" || !to_int(f[2].text) || *to_int(f[2].text) < 0) {
                err(f[0].col, "expected 'h1 rank <n> names <id> ...'");
                continue;
            }
            auto n = static_cast<std::size_t>(*to_int(f[2].text));
            std::vector<std::string> names;
            if (f.size() > 3) {
                if (f[3].text != "names") {
                    err(f[3].col, "expected 'names'");
                    continue;
                }
                bool ok = true;
                for (std::size_t i = 4; i < f.size(); ++i) {
                    if (!is_identifier(f[i].text)) {
                        err(f[i].col, "invalid identifier '" + f[i].text + "'");
                        ok = false;
                    } else if (std::find(names.begin(), names.end(), f[i].text) != names.end()) {
                        err(f[i].col, "duplicate H1 variable '" + f[i].text + "'");
                        ok = false;
                    }
                    names.push_back(f[i].text);
                }
                if (!ok)
                    continue;
            }
            if (names.size() != n) {
                err(f[2].col, "rank " + std::to_string(n) + " but " + std::to_string(names.size()) + " names given");
                continue;
            }
            h1_names = std::move(names);
        } else if (kw == "gen") {
            if (f.size() < 4 || f[2].text != "deg" || !to_int(f[3].text)) {
                err(f[0].col, "expected 'gen <id> deg <int> [mixed [<i> <j>]]'");
                continue;
            }
            if (!is_identifier(f[1].text)) {
                err(f[1].col, "invalid identifier '" + f[1].text + "'");
                continue;
            }
            Generator g{f[1].text, static_cast<int>(*to_int(f[3].text))};
            if (f.size() > 4) {
                if (f[4].text != "mixed" || (f.size() != 5 && f.size() != 7)) {
                    err(f[4].col, "expected 'mixed' or 'mixed <i> <j>'");
                    continue;
                }
                g.chord_class = ChordClass::Mixed;
                if (f.size() == 7) {
                    auto a = to_int(f[5].text), b = to_int(f[6].text);
                    if (!a || !b) {
                        err(f[5].col, "component labels must be integers");
                        continue;
                    }
                    g.components = {static_cast<int>(*a), static_cast<int>(*b)};
                }
            }
            auto dup = std::find_if(gens.begin(), gens.end(), [&](const Generator& x) { return x.name == g.name; });
            if (dup != gens.end()) {
                err(f[1].col, "duplicate generator '" + g.name + "' (first at line " +
                                  std::to_string(gen_lines[static_cast<std::size_t>(dup - gens.begin())]) + ")");
                continue;
            }
            gens.push_back(std::move(g));
            gen_lines.push_back(line.number);
        } else if (kw == "d") {
            auto eq = line.text.find('=');
            auto lhs = eq == std::string::npos ? f : split_fields(line.text.substr(0, eq));
            if (eq == std::string::npos || lhs.size() != 2) {
                err(f[0].col, "expected 'd <id> = <poly>'");
                continue;
            }
            pending.push_back({line.number, lhs[1].col, eq + 2, lhs[1].text, line.text.substr(eq + 1)});
        } else {
            err(f[0].col, "unknown directive '" + kw + "'");
        }
    }

    if (!characteristic)
        diags.push_back({1, 1, "missing 'ring' line"});
    if (!diags.empty())
        throw ParseError(std::move(diags));

    RingSpec ring = RingSpec::from_characteristic(*characteristic, h1_names.value_or(std::vector<std::string>{}));
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (ring.h1_index(gens[i].name))
            diags.push_back({gen_lines[i], 5, "generator '" + gens[i].name + "' clashes with an H1 variable"});
    if (!diags.empty())
        throw ParseError(std::move(diags));

    auto algebra = Algebra::make(ring, gens);
    std::vector<std::optional<NcPoly>> diff(gens.size());
    std::vector<std::size_t> d_lines(gens.size(), 0);
    for (const auto& pd : pending) {
        auto id = algebra->find(pd.name);
        if (!id) {
            diags.push_back({pd.line, pd.name_col, "unknown generator '" + pd.name + "'"});
            continue;
        }
        if (diff[*id]) {
            diags.push_back({pd.line, pd.name_col,
                             "duplicate differential for '" + pd.name + "' (first at line " +
                                 std::to_string(d_lines[*id]) + ")"});
            continue;
        }
        try {
            diff[*id] = parse_poly_impl(pd.poly, algebra);
            d_lines[*id] = pd.line;
        } catch (const PolyError& e) {
            diags.push_back({pd.line, pd.poly_col + e.column, e.message});
        } catch (const Error& e) {
            diags.push_back({pd.line, pd.poly_col, e.what()});
        }
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!diff[i] && std::none_of(pending.begin(), pending.end(), [&](const PendingD& p) { return p.name == gens[i].name; }))
            diags.push_back({gen_lines[i], 1, "missing differential for generator '" + gens[i].name + "'"});
    if (!diags.empty())
        throw ParseError(std::move(diags));

    std::vector<NcPoly> table;
    table.reserve(gens.size());
    for (auto& p : diff)
        table.push_back(std::move(*p));
    DgaDocument doc{Dga(algebra, std::move(table)), gen_lines, d_lines};

    if (opts.verify) {
        auto report = dga_verify(doc.dga);
        for (std::size_t i = 0; i < report.generators.size(); ++i) {
            const auto& g = report.generators[i];
            if (!g.degree_minus_one) {
                std::string msg = "differential of '" + g.name + "' ";
                if (g.found_degree.kind == PolyDegree::Kind::NonHomogeneous)
                    msg += "is not homogeneous";
                else
                    msg += "has degree " + std::to_string(g.found_degree.value) + ", expected " +
                           std::to_string(gens[i].degree - 1);
                diags.push_back({d_lines[i], 1, msg});
            } else if (!g.d_squared_zero) {
                diags.push_back({d_lines[i], 1, "d(d(" + g.name + ")) = " + g.residual.to_string() + " != 0"});
            }
        }
        if (!diags.empty())
            throw VerificationError(std::move(diags));
    }
    return doc;
}

std::string render_dga(const Dga& d)
{
    const auto& ring = d.ring();
    if (ring.is_field() && !ring.field()->is_prime_field())
        throw StructuralError("the .dga format has no syntax for " + ring.coefficient_name() + " coefficients");
    std::ostringstream os;
    os << "ring " << ring.coefficient_name() << '\n';
    os << "h1 rank " << ring.h1_rank();
    if (ring.h1_rank() > 0) {
        os << " names";
        for (const auto& n : ring.h1_names())
            os << ' ' << n;
    }
    os << '\n';
    for (const auto& g : d.generators()) {
        os << "gen " << g.name << " deg " << g.degree;
        if (g.is_mixed()) {
            os << " mixed";
            if (g.components != std::pair<int, int>{0, 1})
                os << ' ' << g.components.first << ' ' << g.components.second;
        }
        os << '\n';
    }
    for (GenId id = 0; id < d.size(); ++id)
        os << "d " << d.generators()[id].name << " = " << d.differential(id).to_string() << '\n';
    return os.str();
}

}  // namespace lch
