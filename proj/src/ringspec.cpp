#include "fcone/ringspec.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fcone/semigroup.hpp"

namespace fcone::cli {

namespace {

[[noreturn]] void fail(int line, int col, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                     ": " + what);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

long parse_long(const std::string& tok, int line, int col) {
    try {
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) fail(line, col, "bad integer '" + tok + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        fail(line, col, "bad integer '" + tok + "'");
    }
}

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// One monomial: var^exp tokens separated by whitespace, e.g. "x^3 y".
monomial::Monomial parse_monomial(const std::string& text,
                                  const std::vector<std::string>& vars, int line, int col) {
    monomial::Monomial m(vars.size(), 0);
    std::istringstream in(text);
    std::string tok;
    bool any = false;
    while (in >> tok) {
        any = true;
        std::string name = tok;
        long exp = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            name = tok.substr(0, caret);
            exp = parse_long(tok.substr(caret + 1), line, col);
            if (exp < 0) fail(line, col, "negative exponent in '" + tok + "'");
        }
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) fail(line, col, "unknown variable '" + name + "'");
        m[it - vars.begin()] += static_cast<int>(exp);
    }
    if (!any) fail(line, col, "empty ideal generator");
    return m;
}

}  // namespace

std::string to_string(const monomial::Monomial& m, const std::vector<std::string>& vars) {
    std::string out;
    for (size_t v = 0; v < vars.size(); ++v) {
        if (m[v] == 0) continue;
        if (!out.empty()) out += ' ';
        out += vars[v];
        if (m[v] > 1) out += '^' + std::to_string(m[v]);
    }
    return out.empty() ? "1" : out;
}

RingSpec parse_spec(const std::string& text) {
    RingSpec spec;
    bool have_ring = false, have_ideal = false;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        std::istringstream ls(s);
        std::string key;
        ls >> key;
        std::string rest = trim(s.substr(key.size()));
        int col = static_cast<int>(raw.find(key)) + 1;
        int rest_col = rest.empty() ? col : static_cast<int>(raw.find(rest, col)) + 1;
        if (key == "ring") {
            if (have_ring) fail(line, col, "duplicate 'ring' line");
            std::istringstream rs(rest);
            std::string kind, what, items;
            rs >> kind >> what;
            std::getline(rs, items);
            items = trim(items);
            if (kind == "polynomial") {
                if (what != "vars") fail(line, rest_col, "expected 'vars' after 'polynomial'");
                spec.kind = RingKind::Polynomial;
                for (auto& v : split(items, ',')) {
                    std::string name = trim(v);
                    if (name.empty()) fail(line, rest_col, "empty variable name");
                    spec.vars.push_back(name);
                }
                if (spec.vars.empty()) fail(line, rest_col, "no variables given");
            } else if (kind == "semigroup") {
                if (what != "gens") fail(line, rest_col, "expected 'gens' after 'semigroup'");
                spec.kind = RingKind::Semigroup;
                for (auto& g : split(items, ','))
                    spec.sgens.push_back(parse_long(trim(g), line, rest_col));
                if (spec.sgens.empty()) fail(line, rest_col, "no semigroup generators");
                long g = 0;
                for (long v : spec.sgens) {
                    if (v <= 0) fail(line, rest_col, "semigroup generators must be positive");
                    g = std::gcd(g, v);
                }
                if (g != 1)
                    fail(line, rest_col,
                         "semigroup generators must be coprime (gcd = " + std::to_string(g) +
                             " != 1)");
            } else {
                fail(line, rest_col, "ring kind must be 'polynomial' or 'semigroup'");
            }
            have_ring = true;
        } else if (key == "ideal") {
            if (!have_ring) fail(line, col, "'ideal' must come after 'ring'");
            if (have_ideal) fail(line, col, "duplicate 'ideal' line");
            for (auto& part : split(rest, ',')) {
                std::string gen = trim(part);
                if (spec.kind == RingKind::Polynomial)
                    spec.ideal_monos.push_back(parse_monomial(gen, spec.vars, line, rest_col));
                else
                    spec.ideal_exps.push_back(parse_long(gen, line, rest_col));
            }
            have_ideal = true;
        } else if (key == "prime") {
            long p = parse_long(rest, line, rest_col);
            if (p < 2 || !is_prime(static_cast<uint32_t>(p)))
                fail(line, rest_col, "'" + rest + "' is not a prime");
            spec.bounds.prime = static_cast<uint32_t>(p);
        } else if (key == "seed") {
            spec.bounds.seed = static_cast<uint64_t>(parse_long(rest, line, rest_col));
        } else if (key == "trunc" || key == "Nmax" || key == "nmax" || key == "samples" ||
                   key == "guard") {
            long v = parse_long(rest, line, rest_col);
            if (v <= 0) fail(line, rest_col, "'" + key + "' must be positive");
            if (key == "trunc") spec.bounds.trunc = static_cast<int>(v);
            if (key == "Nmax") spec.bounds.Nmax = static_cast<int>(v);
            if (key == "nmax") spec.bounds.nmax = static_cast<int>(v);
            if (key == "samples") spec.bounds.samples = static_cast<int>(v);
            if (key == "guard") spec.bounds.guard = static_cast<int>(v);
        } else {
            fail(line, col, "unknown key '" + key + "'");
        }
    }
    if (!have_ring) throw ParseError("missing 'ring' line");
    if (!have_ideal) throw ParseError("missing 'ideal' line");
    // semantic validation
    if (spec.kind == RingKind::Polynomial) {
        monomial::MonomialIdeal I(spec.dim(), spec.ideal_monos);
        if (!I.is_m_primary())
            throw ParseError("ideal is not m-primary (needs a pure power of every variable)");
    } else {
        auto s = semigroup::sg_new(spec.sgens);  // validates the semigroup
        semigroup::SemigroupIdeal I(s, spec.ideal_exps);  // validates membership
        (void)I;
    }
    return spec;
}

std::string print_spec(const RingSpec& spec) {
    std::ostringstream out;
    auto join = [](const auto& items, auto render) {
        std::string s;
        for (const auto& x : items) {
            if (!s.empty()) s += ", ";
            s += render(x);
        }
        return s;
    };
    if (spec.kind == RingKind::Polynomial) {
        out << "ring polynomial vars "
            << join(spec.vars, [](const std::string& v) { return v; }) << "\n";
        out << "ideal "
            << join(spec.ideal_monos,
                    [&](const monomial::Monomial& m) { return to_string(m, spec.vars); })
            << "\n";
    } else {
        out << "ring semigroup gens "
            << join(spec.sgens, [](long g) { return std::to_string(g); }) << "\n";
        out << "ideal " << join(spec.ideal_exps, [](long g) { return std::to_string(g); })
            << "\n";
    }
    const Bounds& b = spec.bounds;
    out << "prime " << b.prime << "\n";
    out << "seed " << b.seed << "\n";
    out << "trunc " << b.trunc << "\n";
    out << "Nmax " << b.Nmax << "\n";
    out << "nmax " << b.nmax << "\n";
    out << "samples " << b.samples << "\n";
    out << "guard " << b.guard << "\n";
    return out.str();
}

}  // namespace fcone::cli
