// Symbols, finite words, and the digit-string codec used by every file
// format (symbols 0-9 then a-z, so alphabets up to 36).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "indep/errors.hpp"

namespace indep {

using Symbol = int;
using Word = std::vector<Symbol>;
using Pos = long long;

constexpr int kMaxAlphabet = 36;

inline char symbol_to_digit(Symbol s) {
    if (s < 0 || s >= kMaxAlphabet) throw InputError("symbol out of digit range: " + std::to_string(s));
    return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + (s - 10));
}

inline Symbol digit_to_symbol(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
    throw InputError(std::string("invalid symbol digit: '") + c + "'");
}

inline std::string word_to_digits(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (Symbol s : w) out.push_back(symbol_to_digit(s));
    return out;
}

inline Word digits_to_word(const std::string& digits) {
    Word w;
    w.reserve(digits.size());
    for (char c : digits) w.push_back(digit_to_symbol(c));
    return w;
}

inline void check_word_alphabet(const Word& w, int alphabet) {
    for (Symbol s : w)
        if (s < 0 || s >= alphabet)
            throw InputError("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(alphabet));
}

// Big-endian base-k packing: code(w) = sum w[i] * k^(len-1-i).  Words of a
// fixed length order the same way as their codes.
inline std::uint64_t word_code(const Word& w, int alphabet) {
    std::uint64_t code = 0;
    for (Symbol s : w) code = code * static_cast<std::uint64_t>(alphabet) + static_cast<std::uint64_t>(s);
    return code;
}

inline Word code_word(std::uint64_t code, int alphabet, int len) {
    Word w(static_cast<size_t>(len));
    for (int i = len - 1; i >= 0; --i) {
        w[static_cast<size_t>(i)] = static_cast<Symbol>(code % static_cast<std::uint64_t>(alphabet));
        code /= static_cast<std::uint64_t>(alphabet);
    }
    return w;
}

// k^len with an overflow/budget guard; exact searches enumerate these codes.
inline std::uint64_t checked_pow(int alphabet, int len, std::uint64_t budget, const char* what) {
    std::uint64_t v = 1;
    for (int i = 0; i < len; ++i) {
        v *= static_cast<std::uint64_t>(alphabet);
        if (v > budget) throw BudgetError(std::string(what) + ": " + std::to_string(alphabet) + "^" + std::to_string(len) + " exceeds budget " + std::to_string(budget));
    }
    return v;
}

}  // namespace indep
