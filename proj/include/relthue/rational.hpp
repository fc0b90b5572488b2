#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace relthue {

using Int = mpz_class;
using Rat = mpq_class;

/** Largest integer <= q. */
inline Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/** Smallest integer >= q. */
inline Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/** floor(sqrt(n)), n >= 0. */
inline Int isqrt_floor(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/** floor(n^(1/k)), n >= 0, k >= 1. */
inline Int kth_root_floor(const Int& n, unsigned long k) {
    Int r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

/** Smallest integer whose k-th power is >= n. */
inline Int kth_root_ceil(const Int& n, unsigned long k) {
    Int r = kth_root_floor(n, k);
    Int p;
    mpz_pow_ui(p.get_mpz_t(), r.get_mpz_t(), k);
    if (p < n) r += 1;
    return r;
}

inline Rat pow_rat(const Rat& q, unsigned long k) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), k);
    r.canonicalize();
    return r;
}

// Exact rational from a decimal literal such as "0.1924", "-58.1", "17", or "1e-9".
// Threshold comparisons downstream stay exact because nothing is ever rounded here.
inline Rat parse_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_decimal: empty string");
    std::string s = text;
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
        exp10 = std::stol(s.substr(e + 1));
        s = s.substr(0, e);
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false;
    for (char c : s) {
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("parse_decimal: bad literal " + text);
            seen_dot = true;
        } else {
            digits.push_back(c);
            if (seen_dot && c != '+' && c != '-') frac_digits++;
        }
    }
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("parse_decimal: bad literal " + text);
    Rat r(Int(digits, 10), 1); // base forced: a leading zero must not trigger octal detection
    long shift = exp10 - frac_digits;
    Int pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0) r *= Rat(pow10, 1);
    else r /= Rat(pow10, 1);
    r.canonicalize();
    return r;
}

/** Fixed-point decimal rendering with the given number of fractional digits (truncates toward zero). */
inline std::string rat_to_decimal(const Rat& q, int digits) {
    Rat a = q >= 0 ? q : Rat(-q);
    Int pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Int scaled = floor_rat(a * Rat(pow10, 1));
    Int whole = scaled / pow10, frac = scaled % pow10;
    std::string f = frac.get_str();
    f.insert(0, static_cast<size_t>(digits) - f.size(), '0');
    std::string out = (q < 0 ? "-" : "") + whole.get_str();
    if (digits > 0) out += "." + f;
    return out;
}

} // namespace relthue
