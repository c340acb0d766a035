#include "freestar/word.hpp"

#include <algorithm>
#include <cctype>

namespace freestar {

char Letter::text() const {
    const unsigned g = generator();
    if (g >= kMaxRank) throw std::invalid_argument("Letter::text: generator out of range");
    const char base = static_cast<char>('a' + g);
    return starred() ? static_cast<char>(std::toupper(base)) : base;
}

Letter Letter::from_text(char c) {
    if (c >= 'a' && c <= 'z') return Letter(static_cast<unsigned>(c - 'a'), false);
    if (c >= 'A' && c <= 'Z') return Letter(static_cast<unsigned>(c - 'A'), true);
    throw std::invalid_argument(std::string("Letter::from_text: bad character '") + c + "'");
}

Word Word::from_text(std::string_view s) {
    std::string data;
    data.reserve(s.size());
    for (char c : s) data.push_back(static_cast<char>(Letter::from_text(c).code()));
    return Word(std::move(data));
}

Word Word::from_bits(std::string_view s) {
    std::string data;
    data.reserve(s.size());
    for (char c : s) {
        if (c == '0') data.push_back(static_cast<char>(Letter(0, false).code()));
        else if (c == '1') data.push_back(static_cast<char>(Letter(0, true).code()));
        else throw std::invalid_argument(std::string("Word::from_bits: bad character '") + c + "'");
    }
    return Word(std::move(data));
}

Word Word::repeated(Letter l, std::size_t n) {
    return Word(std::string(n, static_cast<char>(l.code())));
}

Word Word::star() const {
    std::string data(data_.rbegin(), data_.rend());
    for (char& c : data) c = static_cast<char>(c ^ 1);
    return Word(std::move(data));
}

Word Word::reversed() const {
    return Word(std::string(data_.rbegin(), data_.rend()));
}

Word Word::complemented() const {
    std::string data = data_;
    for (char& c : data) c = static_cast<char>(c ^ 1);
    return Word(std::move(data));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    if (pos > size() || len > size() - pos) throw std::out_of_range("Word::subword");
    return Word(data_.substr(pos, len));
}

Word Word::operator+(const Word& rhs) const {
    Word out = *this;
    out.data_ += rhs.data_;
    return out;
}

Word& Word::operator+=(const Word& rhs) {
    data_ += rhs.data_;
    return *this;
}

Word Word::appended(Letter l) const {
    Word out = *this;
    out.data_.push_back(static_cast<char>(l.code()));
    return out;
}

unsigned Word::max_generator() const {
    unsigned g = 0;
    for (std::size_t i = 0; i < size(); ++i) g = std::max(g, at(i).generator());
    return g;
}

bool Word::is_binary() const {
    for (std::size_t i = 0; i < size(); ++i)
        if (at(i).generator() != 0) return false;
    return true;
}

std::string Word::text() const {
    std::string out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).text());
    return out;
}

std::string Word::bits() const {
    std::string out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        const Letter l = at(i);
        if (l.generator() != 0) throw std::invalid_argument("Word::bits: word is not rank 1");
        out.push_back(l.starred() ? '1' : '0');
    }
    return out;
}

std::vector<std::pair<Letter, std::size_t>> Word::runs() const {
    std::vector<std::pair<Letter, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (!out.empty() && out.back().first == at(i)) ++out.back().second;
        else out.emplace_back(at(i), 1);
    }
    return out;
}

std::size_t Word::max_run() const {
    std::size_t best = 0, cur = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        cur = (i > 0 && at(i) == at(i - 1)) ? cur + 1 : 1;
        best = std::max(best, cur);
    }
    return best;
}

Word nimsum(const Word& u, const Word& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("nimsum: length mismatch");
    std::string bits;
    bits.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].generator() != 0 || v[i].generator() != 0)
            throw std::invalid_argument("nimsum: rank-1 words required");
        bits.push_back((u[i].starred() != v[i].starred()) ? '1' : '0');
    }
    return Word::from_bits(bits);
}

MaskWord::MaskWord(std::string period_bits, std::size_t phase)
    : period_(std::move(period_bits)), phase_(phase) {
    if (period_.empty()) throw std::invalid_argument("MaskWord: empty period");
    for (char c : period_)
        if (c != '0' && c != '1') throw std::invalid_argument("MaskWord: period must be bits");
}

MaskWord MaskWord::omega() { return MaskWord("01", 0); }
MaskWord MaskWord::omega_inv() { return MaskWord("01", 1); }

bool MaskWord::bit(std::size_t i) const {
    return period_[(phase_ + i) % period_.size()] == '1';
}

Word MaskWord::prefix(std::size_t n) const {
    std::string bits;
    bits.reserve(n);
    for (std::size_t i = 0; i < n; ++i) bits.push_back(bit(i) ? '1' : '0');
    return Word::from_bits(bits);
}

Word phi_mask(const MaskWord& q, const Word& v) {
    return nimsum(v, q.prefix(v.size()));
}

}  // namespace freestar
