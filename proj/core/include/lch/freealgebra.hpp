#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lch/groupring.hpp"

namespace lch {

enum class ChordClass { Pure, Mixed };

struct Generator {
    std::string name;
    int degree = 0;
    ChordClass chord_class = ChordClass::Pure;
    /// Ordered component pair (start, end); meaningful for mixed chords only.
    std::pair<int, int> components{0, 1};

    bool is_mixed() const { return chord_class == ChordClass::Mixed; }
    friend bool operator==(const Generator&, const Generator&) = default;
};

using GenId = std::uint32_t;
using Word = std::vector<GenId>;

/// Length-lexicographic order on generator ids.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

/// Coefficient ring plus an ordered generator table. Shared, immutable.
class Algebra {
public:
    static constexpr std::size_t kDefaultMaxWordLength = 16;

    static std::shared_ptr<const Algebra> make(RingSpec ring, std::vector<Generator> gens,
                                               std::size_t max_word_length = kDefaultMaxWordLength);

    const RingSpec& ring() const { return ring_; }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& generator(GenId id) const { return gens_.at(id); }
    std::size_t size() const { return gens_.size(); }
    std::optional<GenId> find(std::string_view name) const;
    std::size_t max_word_length() const { return max_word_length_; }

    int word_degree(const Word& w) const;
    /// True if `this` has the same ring and starts with all of `other`'s generators.
    bool extends(const Algebra& other) const;

    Algebra(RingSpec ring, std::vector<Generator> gens, std::size_t max_word_length);

private:
    RingSpec ring_;
    std::vector<Generator> gens_;
    std::map<std::string, GenId, std::less<>> by_name_;
    std::size_t max_word_length_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Degree of an element: a value, "any" (the zero element) or non-homogeneous.
struct PolyDegree {
    enum class Kind { Homogeneous, Any, NonHomogeneous };
    Kind kind = Kind::Any;
    int value = 0;

    static PolyDegree of(int d) { return {Kind::Homogeneous, d}; }
    static PolyDegree any() { return {Kind::Any, 0}; }
    static PolyDegree non_homogeneous() { return {Kind::NonHomogeneous, 0}; }

    bool is_homogeneous() const { return kind != Kind::NonHomogeneous; }
    /// Homogeneous of degree d (the zero element matches every d).
    bool matches(int d) const { return kind == Kind::Any || (kind == Kind::Homogeneous && value == d); }
    friend bool operator==(const PolyDegree&, const PolyDegree&) = default;
};

/// Element of the free unital algebra over the group ring: a finite sum of
/// central group-ring coefficients times generator words.
class NcPoly {
public:
    using TermMap = std::map<Word, GroupRingElem, WordOrder>;

    explicit NcPoly(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

    static NcPoly scalar(const AlgebraPtr& algebra, const GroupRingElem& c);
    static NcPoly scalar(const AlgebraPtr& algebra, const mpz_class& c);
    static NcPoly generator(const AlgebraPtr& algebra, GenId id);
    static NcPoly word(const AlgebraPtr& algebra, Word w, const GroupRingElem& c);

    const AlgebraPtr& algebra() const { return algebra_; }
    const RingSpec& ring() const { return algebra_->ring(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const GroupRingElem& c);

    NcPoly& operator+=(const NcPoly& rhs);
    NcPoly& operator-=(const NcPoly& rhs);
    NcPoly operator-() const;
    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
    friend bool operator==(const NcPoly& a, const NcPoly& b);
    friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

    /// Multiplication by a central coefficient.
    NcPoly scaled(const GroupRingElem& c) const;

    /// The same element viewed in an algebra that extends this one.
    NcPoly rebase(const AlgebraPtr& target) const;

    /// Text form in the `.dga` term syntax, e.g. `c2 + lambda1*c2 - 2*c1*c3`.
    std::string to_string() const;

private:
    AlgebraPtr algebra_;
    TermMap terms_;
};

NcPoly nc_mul(const NcPoly& a, const NcPoly& b);
PolyDegree nc_degree(const NcPoly& a);

}  // namespace lch
