#include "qft/quaternion.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qft {

Quaternion inverse(const Quaternion& q) {
    const double n2 = modulus_sq(q);
    if (n2 == 0.0) {
        throw std::domain_error("inverse of the zero quaternion is undefined");
    }
    return conj(q) * (1.0 / n2);
}

PolarForm polar(const Quaternion& q) {
    const double mod = modulus(q);
    if (mod == 0.0) {
        throw std::domain_error("polar form of the zero quaternion is undefined");
    }
    const Quaternion v = q.vec();
    const double vmod = modulus(v);
    if (vmod == 0.0) {
        // Real q: the axis is undefined; fixed to i for determinism.
        return {std::abs(q.q0), Quaternion::i(), q.q0 > 0.0 ? 0.0 : M_PI};
    }
    // atan2 keeps the angle in [0, pi] since vmod >= 0.
    const double angle = std::atan2(vmod, q.q0);
    return {mod, v * (1.0 / vmod), angle};
}

Quaternion reconstruct(const PolarForm& p) {
    return p.modulus * (Quaternion::one() * std::cos(p.angle) + p.axis * std::sin(p.angle));
}

std::string to_string(const Quaternion& q) {
    static const char* units[4] = {"", "i", "j", "k"};
    const double comps[4] = {q.q0, q.q1, q.q2, q.q3};
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (int m = 0; m < 4; ++m) {
        if (comps[m] == 0.0) continue;
        if (!first && comps[m] > 0.0) os << '+';
        if (m > 0 && comps[m] == 1.0) {
            if (!first) os << "";
        } else if (m > 0 && comps[m] == -1.0) {
            os << '-';
        } else {
            os << comps[m];
        }
        os << units[m];
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

namespace {

int unit_index(char c) {
    switch (c) {
        case 'i': return 1;
        case 'j': return 2;
        case 'k': return 3;
        default: return -1;
    }
}

}  // namespace

Quaternion parse_quaternion(const std::string& text) {
    double comps[4] = {0.0, 0.0, 0.0, 0.0};
    bool seen[4] = {false, false, false, false};
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw std::invalid_argument("empty quaternion literal");
    bool any = false;
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) break;
        double sign = 1.0;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1.0;
            ++pos;
            skip_ws();
        } else if (any) {
            throw std::invalid_argument("expected '+' or '-' between quaternion terms at position " +
                                        std::to_string(pos));
        }
        // number part (optional when the term is a bare unit like "k")
        double value = 1.0;
        bool have_number = false;
        {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' ||
                    text[pos] == 'e' || text[pos] == 'E' ||
                    ((text[pos] == '+' || text[pos] == '-') && pos > start &&
                     (text[pos - 1] == 'e' || text[pos - 1] == 'E')))) {
                ++pos;
            }
            if (pos > start) {
                try {
                    value = std::stod(text.substr(start, pos - start));
                } catch (const std::exception&) {
                    throw std::invalid_argument("bad number in quaternion literal at position " +
                                                std::to_string(start));
                }
                have_number = true;
            }
        }
        int unit = 0;
        if (pos < text.size() && unit_index(text[pos]) >= 0) {
            unit = unit_index(text[pos]);
            ++pos;
        } else if (!have_number) {
            throw std::invalid_argument("expected a number or unit at position " + std::to_string(pos));
        }
        if (seen[unit]) {
            throw std::invalid_argument("duplicate quaternion term for unit index " +
                                        std::to_string(unit));
        }
        seen[unit] = true;
        comps[unit] = sign * value;
        any = true;
    }
    if (!any) throw std::invalid_argument("empty quaternion literal");
    return {comps[0], comps[1], comps[2], comps[3]};
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << to_string(q);
}

}  // namespace qft
