#include "energylab/set_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace energylab {

namespace {

std::string strip_ws(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

std::string serialize_set(const FiniteSet& s) {
    std::ostringstream out;
    if (s.field().is_prime_field()) {
        out << "# field=prime p=" << s.field().characteristic() << "\n";
    }
    for (const auto& e : s.elems()) out << e.str() << "\n";
    return out.str();
}

FiniteSet parse_set(std::istream& in) {
    std::string line;
    GroundField field = GroundField::rationals();
    std::vector<FieldElem> elems;
    bool first = true;
    while (std::getline(in, line)) {
        std::string t = strip_ws(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            if (first) {
                std::size_t pos = t.find("p=");
                if (t.find("field=prime") != std::string::npos) {
                    if (pos == std::string::npos) throw input_error("prime field header missing p=");
                    field = GroundField::prime(std::stoll(t.substr(pos + 2)));
                }
            }
            first = false;
            continue;
        }
        first = false;
        if (field.is_prime_field()) {
            std::size_t slash = t.find('/');
            if (slash != std::string::npos) {
                FieldElem num = FieldElem::residue(field, std::stoll(t.substr(0, slash)));
                FieldElem den = FieldElem::residue(field, std::stoll(t.substr(slash + 1)));
                elems.push_back(num / den);
            } else {
                elems.push_back(FieldElem::residue(field, std::stoll(t)));
            }
        } else {
            try {
                elems.push_back(FieldElem::rational(mpq_class(t)));
            } catch (const std::invalid_argument&) {
                throw input_error("bad set element: " + t);
            }
        }
    }
    return FiniteSet::make(field, std::move(elems));
}

FiniteSet parse_set_text(const std::string& text) {
    std::istringstream in(text);
    return parse_set(in);
}

FiniteSet load_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot read set file: " + path);
    return parse_set(in);
}

void save_set_file(const FiniteSet& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write set file: " + path);
    out << serialize_set(s);
}

}  // namespace energylab
