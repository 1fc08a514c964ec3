#include "watercells/composition.hpp"

#include <algorithm>
#include <stdexcept>

namespace watercells {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int part : parts_) {
        if (part < 1) {
            throw std::invalid_argument("Composition: every part must be >= 1");
        }
        total_ += part;
    }
}

std::string Composition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

CutJoinSequence CutJoinSequence::from_string(std::string_view text) {
    std::vector<CutJoin> symbols;
    symbols.reserve(text.size());
    for (char ch : text) {
        if (ch == 'C') {
            symbols.push_back(CutJoin::Cut);
        } else if (ch == 'J') {
            symbols.push_back(CutJoin::Join);
        } else {
            throw std::invalid_argument("CutJoinSequence: expected only 'C' or 'J'");
        }
    }
    return CutJoinSequence(std::move(symbols));
}

std::string CutJoinSequence::to_string() const {
    std::string out;
    out.reserve(symbols_.size());
    for (CutJoin s : symbols_) {
        out.push_back(s == CutJoin::Cut ? 'C' : 'J');
    }
    return out;
}

CutJoinSequence CutJoinSequence::flipped() const {
    std::vector<CutJoin> symbols;
    symbols.reserve(symbols_.size());
    for (CutJoin s : symbols_) {
        symbols.push_back(s == CutJoin::Cut ? CutJoin::Join : CutJoin::Cut);
    }
    return CutJoinSequence(std::move(symbols));
}

CutJoinSequence to_cut_join(const Composition& c) {
    std::vector<CutJoin> symbols;
    if (c.total() >= 1) {
        symbols.reserve(static_cast<std::size_t>(c.total() - 1));
    }
    const auto& parts = c.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int j = 1; j < parts[i]; ++j) {
            symbols.push_back(CutJoin::Join);
        }
        if (i + 1 < parts.size()) {
            symbols.push_back(CutJoin::Cut);
        }
    }
    return CutJoinSequence(std::move(symbols));
}

Composition from_cut_join(const CutJoinSequence& s) {
    // A maximal run of j joins bounded by cuts or the ends decodes to a part
    // j+1; the empty word decodes to (1).
    std::vector<int> parts;
    int current = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == CutJoin::Join) {
            ++current;
        } else {
            parts.push_back(current);
            current = 1;
        }
    }
    parts.push_back(current);
    return Composition(std::move(parts));
}

Composition conjugate(const Composition& c) {
    if (c.empty()) {
        throw std::invalid_argument("conjugate: the empty composition has no juncture word");
    }
    return from_cut_join(to_cut_join(c).flipped());
}

std::vector<long long> water_depths(const Composition& c) {
    const auto& parts = c.parts();
    std::vector<long long> depths(parts.size(), 0);
    if (parts.size() < 3) {
        return depths;
    }
    std::vector<int> left_max(parts.size(), 0);
    std::vector<int> right_max(parts.size(), 0);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        left_max[i] = std::max(left_max[i - 1], parts[i - 1]);
    }
    for (std::size_t i = parts.size() - 1; i-- > 0;) {
        right_max[i] = std::max(right_max[i + 1], parts[i + 1]);
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        long long level = std::min(left_max[i], right_max[i]);
        depths[i] = std::max(0ll, level - parts[i]);
    }
    return depths;
}

long long water_cells(const Composition& c) {
    long long total = 0;
    for (long long depth : water_depths(c)) {
        total += depth;
    }
    return total;
}

CompositionStream::CompositionStream(FamilyKind kind, int n) : kind_(kind), n_(n) {
    if (n < 0) {
        throw std::invalid_argument("CompositionStream: n must be >= 0");
    }
    remaining_ = n;
}

bool CompositionStream::placeable(int part, std::size_t position, int remaining_after) const {
    switch (kind_) {
        case FamilyKind::All:
            return true;
        case FamilyKind::Parts12:
            return part <= 2;
        case FamilyKind::InternalEven:
            // A part is internal when it is neither first nor last; internal
            // parts must be even. Any placement leaves a completable state
            // because the final part may take any value.
            return position == 0 || remaining_after == 0 || part % 2 == 0;
    }
    return false;
}

void CompositionStream::descend() {
    // Extend with the lexicographically smallest parts until the sum is n.
    while (remaining_ > 0) {
        int part = 1;
        while (!placeable(part, parts_.size(), remaining_ - part)) {
            ++part;
        }
        parts_.push_back(part);
        remaining_ -= part;
    }
}

bool CompositionStream::advance() {
    while (!parts_.empty()) {
        int last = parts_.back();
        parts_.pop_back();
        remaining_ += last;
        int limit = kind_ == FamilyKind::Parts12 ? std::min(2, remaining_) : remaining_;
        for (int part = last + 1; part <= limit; ++part) {
            if (placeable(part, parts_.size(), remaining_ - part)) {
                parts_.push_back(part);
                remaining_ -= part;
                descend();
                return true;
            }
        }
    }
    return false;
}

std::optional<Composition> CompositionStream::next() {
    if (done_) {
        return std::nullopt;
    }
    if (!started_) {
        started_ = true;
        descend();  // n = 0 correctly yields the empty composition first
    } else if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return Composition(parts_);
}

std::vector<Composition> enumerate(FamilyKind kind, int n) {
    std::vector<Composition> out;
    CompositionStream stream(kind, n);
    while (auto c = stream.next()) {
        out.push_back(std::move(*c));
    }
    return out;
}

BigInt fibonacci(int n) {
    if (n < 0) {
        throw std::invalid_argument("fibonacci: n must be >= 0");
    }
    BigInt a = 0;
    BigInt b = 1;
    for (int i = 0; i < n; ++i) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

}  // namespace watercells
