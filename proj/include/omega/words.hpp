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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace omega {

using Letter = std::uint32_t;

/// Ordered set of symbol tokens. Letters are indices into the declaration
/// order, so two alphabets with the same tokens in a different order are
/// different alphabets.
class Alphabet
{
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    /// Single-character tokens, e.g. Alphabet::of_chars("abc").
    static Alphabet of_chars(std::string_view chars);
    /// Comma-separated tokens, e.g. "a,b,c".
    static Alphabet parse_csv(std::string_view csv);

    std::size_t size() const { return symbols_.size(); }
    const std::string& symbol(Letter l) const { return symbols_.at(l); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    std::optional<Letter> index_of(std::string_view token) const;
    bool contains(std::string_view token) const { return index_of(token).has_value(); }

    /// True iff every token of this alphabet is a token of `other`.
    bool is_subset_of(const Alphabet& other) const;
    /// True iff all tokens are one character long (compact word literals).
    bool single_char() const;

    std::string to_string() const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> symbols_;
};

struct FiniteWord
{
    std::vector<Letter> letters;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    bool operator==(const FiniteWord&) const = default;
    auto operator<=>(const FiniteWord&) const = default;
};

/// Parses a word of single-character tokens ("" is the empty word).
FiniteWord parse_word(const Alphabet& alphabet, std::string_view text);
FiniteWord word_from_tokens(const Alphabet& alphabet, const std::vector<std::string>& tokens);
std::string render(const Alphabet& alphabet, const FiniteWord& w);

/// The ultimately periodic word prefix . period^omega, always held in
/// canonical form: the period is primitive and the prefix is as short as
/// possible. Two UPWords denote the same infinite word iff their fields
/// are equal.
class UPWord
{
public:
    const Alphabet& alphabet() const { return alphabet_; }
    const FiniteWord& prefix() const { return prefix_; }
    const FiniteWord& period() const { return period_; }

    Letter at(std::size_t i) const
    {
        const auto u = prefix_.size();
        return i < u ? prefix_.letters[i] : period_.letters[(i - u) % period_.size()];
    }

    /// Same infinite word re-indexed over a superset alphabet.
    UPWord over(const Alphabet& superset) const;

    /// Literal syntax u(v)^w.
    std::string to_string() const;

    bool operator==(const UPWord&) const = default;

private:
    friend UPWord canonicalize(const Alphabet&, const FiniteWord&, const FiniteWord&);

    UPWord(Alphabet alphabet, FiniteWord prefix, FiniteWord period)
        : alphabet_(std::move(alphabet)), prefix_(std::move(prefix)), period_(std::move(period))
    {
    }

    Alphabet alphabet_;
    FiniteWord prefix_;
    FiniteWord period_;
};

/// Canonical representative of u . v^omega.
/// Throws ValidationError on an empty period or an out-of-range letter.
UPWord canonicalize(const Alphabet& alphabet, const FiniteWord& u, const FiniteWord& v);

/// Parses the literal syntax `u(v)^w`, e.g. "ab(ab)^w" or "(b)^w".
UPWord parse_up_word(const Alphabet& alphabet, std::string_view text);

/// Decides equality by letter comparison up to |u1|+|u2|+lcm(|v1|,|v2|).
/// Both words are periodic with period lcm(|v1|,|v2|) from position
/// max(|u1|,|u2|) on, so agreement up to that bound forces agreement
/// everywhere. Throws AlphabetMismatch.
bool up_equal(const UPWord& w1, const UPWord& w2);

/// Exact distance 2^-n, or zero. Stored by exponent so that no precision is
/// lost for long common prefixes.
class DyadicDistance
{
public:
    static DyadicDistance zero() { return DyadicDistance(); }
    static DyadicDistance inverse_power_of_two(std::size_t n) { return DyadicDistance(n); }

    bool is_zero() const { return !exponent_.has_value(); }
    /// n such that the distance is 1/2^n; only for non-zero distances.
    std::size_t exponent() const { return exponent_.value(); }

    std::uint64_t numerator() const { return is_zero() ? 0 : 1; }
    /// 2^n; throws std::overflow_error when n >= 64.
    std::uint64_t denominator() const;

    /// "0", "1", "1/4", or "1/2^70" when the denominator does not fit.
    std::string to_string() const;

    std::strong_ordering operator<=>(const DyadicDistance& other) const;
    bool operator==(const DyadicDistance& other) const = default;

private:
    DyadicDistance() = default;
    explicit DyadicDistance(std::size_t n) : exponent_(n) {}

    std::optional<std::size_t> exponent_;
};

struct WordDistance
{
    std::optional<std::size_t> first_diff_index;
    DyadicDistance distance;
};

/// d(w1,w2) = 1/2^n with n the first index where the words differ.
WordDistance word_distance(const UPWord& w1, const UPWord& w2);

} // namespace omega
