#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qhopf {

using GenId = std::uint8_t;

struct Letter {
    GenId gen;
    int exp;  // always >= 1; inverse generators are separate letters
    bool operator==(const Letter&) const = default;
};

/// Monomial in the free monoid: a run-length encoded sequence of generator
/// letters.  Adjacent runs carry distinct generators and every exponent is
/// positive; the empty word is the unit.
class Word {
public:
    Word() = default;
    static Word one() { return Word(); }
    static Word letter(GenId g, int exp = 1);

    bool empty() const { return runs_.empty(); }
    const std::vector<Letter>& runs() const { return runs_; }
    std::size_t run_count() const { return runs_.size(); }
    const Letter& run(std::size_t i) const { return runs_[i]; }
    const Letter& back() const { return runs_.back(); }

    int letter_count() const;
    int total_exp(GenId g) const;

    /// Append a run, merging with the tail when the generator matches.
    void append(GenId g, int exp);
    void append(const Word& w);
    void append_range(const Word& w, std::size_t first_run, std::size_t last_run);

    static Word concat(const Word& a, const Word& b);

    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> runs_;
};

}  // namespace qhopf
