#include "qhopf/word.hpp"

namespace qhopf {

Word Word::letter(GenId g, int exp) {
    Word w;
    if (exp > 0) w.runs_.push_back({g, exp});
    return w;
}

int Word::letter_count() const {
    int n = 0;
    for (const auto& r : runs_) n += r.exp;
    return n;
}

int Word::total_exp(GenId g) const {
    int n = 0;
    for (const auto& r : runs_)
        if (r.gen == g) n += r.exp;
    return n;
}

void Word::append(GenId g, int exp) {
    if (exp <= 0) return;
    if (!runs_.empty() && runs_.back().gen == g) {
        runs_.back().exp += exp;
    } else {
        runs_.push_back({g, exp});
    }
}

void Word::append(const Word& w) {
    for (const auto& r : w.runs_) append(r.gen, r.exp);
}

void Word::append_range(const Word& w, std::size_t first_run, std::size_t last_run) {
    for (std::size_t i = first_run; i < last_run && i < w.runs_.size(); ++i)
        append(w.runs_[i].gen, w.runs_[i].exp);
}

Word Word::concat(const Word& a, const Word& b) {
    Word w = a;
    w.append(b);
    return w;
}

}  // namespace qhopf
