/*
 * Copyright 2026 The omegajump Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "omega/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "omega/error.hpp"

namespace omega {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols))
{
    if (symbols_.empty()) throw ValidationError("alphabet must not be empty");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto& s = symbols_[i];
        if (s.empty()) throw ValidationError("empty alphabet symbol");
        for (char c : s) {
            if (c <= ' ' || c == ',' || c == 127) {
                throw ValidationError("alphabet symbol '" + s + "' contains whitespace, comma or control characters");
            }
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (symbols_[j] == s) throw ValidationError("duplicate alphabet symbol '" + s + "'");
        }
    }
}

Alphabet
Alphabet::of_chars(std::string_view chars)
{
    std::vector<std::string> syms;
    for (char c : chars) syms.emplace_back(1, c);
    return Alphabet(std::move(syms));
}

Alphabet
Alphabet::parse_csv(std::string_view csv)
{
    std::vector<std::string> syms;
    std::size_t start = 0;
    while (start <= csv.size()) {
        auto end = csv.find(',', start);
        if (end == std::string_view::npos) end = csv.size();
        auto tok = csv.substr(start, end - start);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        syms.emplace_back(tok);
        start = end + 1;
    }
    return Alphabet(std::move(syms));
}

std::optional<Letter>
Alphabet::index_of(std::string_view token) const
{
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] == token) return static_cast<Letter>(i);
    }
    return std::nullopt;
}

bool
Alphabet::is_subset_of(const Alphabet& other) const
{
    return std::all_of(symbols_.begin(), symbols_.end(), [&](const std::string& s) { return other.contains(s); });
}

bool
Alphabet::single_char() const
{
    return std::all_of(symbols_.begin(), symbols_.end(), [](const std::string& s) { return s.size() == 1; });
}

std::string
Alphabet::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i) out += ',';
        out += symbols_[i];
    }
    return out;
}

FiniteWord
parse_word(const Alphabet& alphabet, std::string_view text)
{
    FiniteWord w;
    for (char c : text) {
        auto l = alphabet.index_of(std::string_view(&c, 1));
        if (!l) throw ValidationError(std::string("letter '") + c + "' is not in alphabet {" + alphabet.to_string() + "}");
        w.letters.push_back(*l);
    }
    return w;
}

FiniteWord
word_from_tokens(const Alphabet& alphabet, const std::vector<std::string>& tokens)
{
    FiniteWord w;
    for (const auto& t : tokens) {
        auto l = alphabet.index_of(t);
        if (!l) throw ValidationError("letter '" + t + "' is not in alphabet {" + alphabet.to_string() + "}");
        w.letters.push_back(*l);
    }
    return w;
}

std::string
render(const Alphabet& alphabet, const FiniteWord& w)
{
    const bool compact = alphabet.single_char();
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i) out += ' ';
        out += alphabet.symbol(w.letters[i]);
    }
    return out;
}

namespace {

std::size_t
primitive_root_length(const std::vector<Letter>& v)
{
    const auto n = v.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) ok = v[i] == v[i - p];
        if (ok) return p;
    }
    return n;
}

} // namespace

UPWord
canonicalize(const Alphabet& alphabet, const FiniteWord& u, const FiniteWord& v)
{
    if (v.empty()) throw ValidationError("period of an ultimately periodic word must be non-empty");
    for (const auto* w : {&u, &v}) {
        for (Letter l : w->letters) {
            if (l >= alphabet.size()) throw ValidationError("letter index " + std::to_string(l) + " outside alphabet");
        }
    }

    std::vector<Letter> period(v.letters.begin(), v.letters.begin() + primitive_root_length(v.letters));
    std::vector<Letter> prefix = u.letters;

    // u x . (y x)^w == u . (x y)^w: absorb the last prefix letter while it
    // matches the last period letter.
    while (!prefix.empty() && prefix.back() == period.back()) {
        prefix.pop_back();
        std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    }
    return UPWord(alphabet, FiniteWord{std::move(prefix)}, FiniteWord{std::move(period)});
}

UPWord
parse_up_word(const Alphabet& alphabet, std::string_view text)
{
    const auto open = text.find('(');
    const auto close = text.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open
        || text.substr(close + 1) != "^w") {
        throw ValidationError("malformed ultimately periodic word '" + std::string(text) + "', expected u(v)^w");
    }
    auto u = parse_word(alphabet, text.substr(0, open));
    auto v = parse_word(alphabet, text.substr(open + 1, close - open - 1));
    return canonicalize(alphabet, u, v);
}

UPWord
UPWord::over(const Alphabet& superset) const
{
    if (!alphabet_.is_subset_of(superset)) {
        throw AlphabetMismatch("{" + alphabet_.to_string() + "} is not a subset of {" + superset.to_string() + "}");
    }
    auto remap = [&](const FiniteWord& w) {
        FiniteWord out;
        for (Letter l : w.letters) out.letters.push_back(*superset.index_of(alphabet_.symbol(l)));
        return out;
    };
    return canonicalize(superset, remap(prefix_), remap(period_));
}

std::string
UPWord::to_string() const
{
    return render(alphabet_, prefix_) + "(" + render(alphabet_, period_) + ")^w";
}

namespace {

void
require_same_alphabet(const UPWord& w1, const UPWord& w2)
{
    if (!(w1.alphabet() == w2.alphabet())) {
        throw AlphabetMismatch("words over {" + w1.alphabet().to_string() + "} and {" + w2.alphabet().to_string() + "}");
    }
}

std::size_t
agreement_bound(const UPWord& w1, const UPWord& w2)
{
    return w1.prefix().size() + w2.prefix().size() + std::lcm(w1.period().size(), w2.period().size());
}

std::optional<std::size_t>
first_difference(const UPWord& w1, const UPWord& w2)
{
    require_same_alphabet(w1, w2);
    const auto bound = agreement_bound(w1, w2);
    for (std::size_t i = 0; i < bound; ++i) {
        if (w1.at(i) != w2.at(i)) return i;
    }
    return std::nullopt;
}

} // namespace

bool
up_equal(const UPWord& w1, const UPWord& w2)
{
    return !first_difference(w1, w2).has_value();
}

std::uint64_t
DyadicDistance::denominator() const
{
    if (is_zero()) return 1;
    if (*exponent_ >= 64) throw std::overflow_error("distance denominator 2^" + std::to_string(*exponent_) + " overflows");
    return std::uint64_t{1} << *exponent_;
}

std::string
DyadicDistance::to_string() const
{
    if (is_zero()) return "0";
    if (*exponent_ == 0) return "1";
    if (*exponent_ < 64) return "1/" + std::to_string(denominator());
    return "1/2^" + std::to_string(*exponent_);
}

std::strong_ordering
DyadicDistance::operator<=>(const DyadicDistance& other) const
{
    if (is_zero() || other.is_zero()) return other.is_zero() <=> is_zero();
    // larger exponent, smaller distance
    return other.exponent() <=> exponent();
}

WordDistance
word_distance(const UPWord& w1, const UPWord& w2)
{
    auto n = first_difference(w1, w2);
    if (!n) return {std::nullopt, DyadicDistance::zero()};
    return {n, DyadicDistance::inverse_power_of_two(*n)};
}

} // namespace omega
