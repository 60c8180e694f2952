#include "fibercert/presentation.hpp"

#include <gmpxx.h>

#include <fstream>
#include <sstream>

#include "fibercert/errors.hpp"
#include "fibercert/util.hpp"

namespace fibercert {

void Presentation::validate() const {
    if (num_generators <= 0)
        throw InputError("presentation needs a positive number of generators");
    for (const Word& r : relators) {
        if (r.empty())
            throw InputError("empty relator survived construction");
        if (r.max_gen() >= num_generators)
            throw InputError("relator uses generator index " + std::to_string(r.max_gen()) +
                             " but presentation has " + std::to_string(num_generators) +
                             " generators");
    }
}

long PhiClass::operator()(const Word& w) const {
    long sum = 0;
    for (const Letter& l : w.letters()) {
        if (l.gen >= static_cast<int>(values_.size()))
            throw InputError("phi evaluated on out-of-range generator");
        sum += l.sign * values_[static_cast<std::size_t>(l.gen)];
    }
    return sum;
}

bool PhiClass::nontrivial() const {
    for (long v : values_)
        if (v != 0)
            return true;
    return false;
}

bool PhiClass::primitive() const {
    long g = 0;
    for (long v : values_)
        g = gcd_long(g, v);
    return g == 1;
}

void validate_phi(const Presentation& pres, const PhiClass& phi) {
    if (static_cast<int>(phi.values().size()) != pres.num_generators)
        throw InputError("phi has " + std::to_string(phi.values().size()) +
                         " values for " + std::to_string(pres.num_generators) + " generators");
    for (std::size_t i = 0; i < pres.relators.size(); ++i)
        if (phi(pres.relators[i]) != 0)
            throw InputError("phi does not vanish on relator " + std::to_string(i));
}

PhiClass infer_phi(const Presentation& pres) {
    const int g = pres.num_generators;
    const std::size_t r = pres.relators.size();
    // Abelianized relator matrix over Q; phi spans its kernel when that
    // kernel is one-dimensional.
    std::vector<std::vector<mpq_class>> a(r, std::vector<mpq_class>(static_cast<std::size_t>(g), 0));
    for (std::size_t i = 0; i < r; ++i)
        for (const Letter& l : pres.relators[i].letters())
            a[i][static_cast<std::size_t>(l.gen)] += l.sign;

    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (int col = 0; col < g && row < r; ++col) {
        std::size_t sel = r;
        for (std::size_t i = row; i < r; ++i)
            if (a[i][static_cast<std::size_t>(col)] != 0) {
                sel = i;
                break;
            }
        if (sel == r)
            continue;
        std::swap(a[sel], a[row]);
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row || a[i][static_cast<std::size_t>(col)] == 0)
                continue;
            mpq_class f = a[i][static_cast<std::size_t>(col)] / a[row][static_cast<std::size_t>(col)];
            for (int j = col; j < g; ++j)
                a[i][static_cast<std::size_t>(j)] -= f * a[row][static_cast<std::size_t>(j)];
        }
        pivot_col.push_back(col);
        ++row;
    }
    const std::size_t rank = pivot_col.size();
    if (static_cast<std::size_t>(g) - rank != 1)
        throw InputError("cannot infer phi: first homology has rank " +
                         std::to_string(g - static_cast<int>(rank)) +
                         "; add an explicit 'phi:' line");

    // The single free column determines the kernel vector.
    std::vector<bool> is_pivot(static_cast<std::size_t>(g), false);
    for (int c : pivot_col)
        is_pivot[static_cast<std::size_t>(c)] = true;
    int free_col = 0;
    while (is_pivot[static_cast<std::size_t>(free_col)])
        ++free_col;

    std::vector<mpq_class> v(static_cast<std::size_t>(g), 0);
    v[static_cast<std::size_t>(free_col)] = 1;
    for (std::size_t i = 0; i < rank; ++i) {
        std::size_t c = static_cast<std::size_t>(pivot_col[i]);
        v[c] = -a[i][static_cast<std::size_t>(free_col)] / a[i][c];
    }
    mpz_class denom = 1;
    for (const auto& q : v)
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_class content = 0;
    std::vector<mpz_class> w(static_cast<std::size_t>(g));
    for (std::size_t j = 0; j < v.size(); ++j) {
        mpq_class scaled = v[j] * mpq_class(denom);
        w[j] = scaled.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w[j].get_mpz_t());
    }
    std::vector<long> values(static_cast<std::size_t>(g), 0);
    int lead_sign = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        mpz_class q = content == 0 ? mpz_class(0) : mpz_class(w[j] / content);
        if (!q.fits_slong_p())
            throw InputError("inferred phi value out of range");
        values[j] = q.get_si();
        if (lead_sign == 0 && values[j] != 0)
            lead_sign = values[j] > 0 ? 1 : -1;
    }
    if (lead_sign < 0)
        for (long& x : values)
            x = -x;
    PhiClass phi(values);
    validate_phi(pres, phi);
    return phi;
}

namespace {

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

PresentationFile parse_presentation(const std::string& text) {
    PresentationFile out;
    bool saw_gens = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trimmed(raw);
        if (line.empty() || line[0] == '#')
            continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'key: value'", lineno);
        std::string key = trimmed(line.substr(0, colon));
        std::string value = trimmed(line.substr(colon + 1));
        if (key == "gens") {
            try {
                out.pres.num_generators = std::stoi(value);
            } catch (const std::exception&) {
                throw ParseError("invalid generator count '" + value + "'", lineno);
            }
            saw_gens = true;
        } else if (key == "rel") {
            Word w;
            try {
                w = Word::parse(value);
            } catch (const ParseError& e) {
                throw ParseError("bad relator word", lineno, e.column);
            }
            if (!w.empty())
                out.pres.relators.push_back(std::move(w));
        } else if (key == "phi") {
            std::istringstream vs(value);
            std::vector<long> vals;
            long x;
            while (vs >> x)
                vals.push_back(x);
            if (!vs.eof())
                throw ParseError("invalid phi values '" + value + "'", lineno);
            out.phi = PhiClass(std::move(vals));
        } else if (key == "label") {
            out.pres.label = value;
        } else if (key == "b3") {
            if (value != "0" && value != "1")
                throw ParseError("b3 must be 0 or 1", lineno);
            out.b3 = value == "1" ? 1 : 0;
        } else if (key == "closed") {
            if (value != "true" && value != "false")
                throw ParseError("closed must be true or false", lineno);
            out.closed = value == "true";
        } else {
            throw ParseError("unknown key '" + key + "'", lineno);
        }
    }
    if (!saw_gens)
        throw ParseError("missing 'gens:' line");
    out.pres.validate();
    if (out.phi)
        validate_phi(out.pres, *out.phi);
    return out;
}

PresentationFile load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open presentation file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

std::string presentation_to_text(const Presentation& pres, const PhiClass& phi) {
    std::ostringstream out;
    out << "gens: " << pres.num_generators << "\n";
    for (const Word& r : pres.relators)
        out << "rel: " << r.str() << "\n";
    out << "phi:";
    for (long v : phi.values())
        out << " " << v;
    out << "\n";
    if (!pres.label.empty())
        out << "label: " << pres.label << "\n";
    return out.str();
}

} // namespace fibercert
