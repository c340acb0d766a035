#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "freestar/word.hpp"

using namespace freestar;

namespace {

// All rank-1 words of length exactly n.
std::vector<Word> all_binary(unsigned n) {
    std::vector<Word> out{Word{}};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Word> next;
        next.reserve(out.size() * 2);
        for (const Word& w : out) {
            next.push_back(w.appended(Letter(0, false)));
            next.push_back(w.appended(Letter(0, true)));
        }
        out = std::move(next);
    }
    return out;
}

Word random_word(std::mt19937& rng, unsigned rank, std::size_t len) {
    std::uniform_int_distribution<unsigned> pick(0, 2 * rank - 1);
    Word w;
    for (std::size_t i = 0; i < len; ++i)
        w = w.appended(Letter::from_code(static_cast<std::uint8_t>(pick(rng))));
    return w;
}

}  // namespace

TEST_CASE("letter text round trip") {
    CHECK(Letter(0, false).text() == 'a');
    CHECK(Letter(0, true).text() == 'A');
    CHECK(Letter(1, false).text() == 'b');
    CHECK(Letter::from_text('B') == Letter(1, true));
    CHECK(Letter(0, false).partner() == Letter(0, true));
    CHECK_THROWS_AS(Letter::from_text('!'), std::invalid_argument);
}

TEST_CASE("word parse and print round trip") {
    for (const char* s : {"", "a", "aA", "aAaB", "bBaA"}) {
        CHECK(Word::from_text(s).text() == s);
    }
    CHECK(Word::from_bits("011").text() == "aAA");
    CHECK(Word::from_bits("011").bits() == "011");
    CHECK_THROWS_AS(Word::from_bits("012"), std::invalid_argument);
    CHECK_THROWS_AS(Word::from_text("ab").bits(), std::invalid_argument);
}

TEST_CASE("star involution examples") {
    CHECK(Word::from_bits("011").star().bits() == "001");
    CHECK(Word{}.star() == Word{});
    CHECK(Word::from_bits("0").star().bits() == "1");
    // (011)(001)(011) is w w* w for w = 011
    const Word w = Word::from_bits("011");
    CHECK((w + w.star() + w).bits() == "011001011");
}

TEST_CASE("star is an involution and an anti-homomorphism") {
    for (unsigned n = 0; n <= 12; ++n)
        for (const Word& w : all_binary(n))
            CHECK(w.star().star() == w);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Word u = random_word(rng, 2, trial % 9);
        const Word v = random_word(rng, 2, (trial + 3) % 9);
        CHECK((u + v).star() == v.star() + u.star());
        CHECK(u.star().star() == u);
    }
}

TEST_CASE("nimsum examples and errors") {
    const Word x = Word::from_bits("010");
    CHECK(nimsum(x, x).bits() == "000");
    CHECK(nimsum(Word::from_bits("011110011"), Word::from_bits("010101010")).bits() ==
          "001011001");
    CHECK(nimsum(Word::from_bits("001100"), Word::from_bits("010101")).bits() == "011001");
    CHECK_THROWS_AS(nimsum(Word::from_bits("01"), Word::from_bits("0")), std::invalid_argument);
    CHECK_THROWS_AS(nimsum(Word::from_text("b"), Word::from_text("a")), std::invalid_argument);
}

TEST_CASE("mask prefixes") {
    CHECK(MaskWord::omega().prefix(0) == Word{});
    CHECK(MaskWord::omega().prefix(3).bits() == "010");
    CHECK(MaskWord::omega_inv().prefix(3).bits() == "101");
    CHECK(MaskWord::omega().prefix(8).bits() == "01010101");
    CHECK_THROWS_AS(MaskWord(""), std::invalid_argument);
}

TEST_CASE("phi mask examples") {
    const MaskWord omega = MaskWord::omega();
    CHECK(phi_mask(omega, Word::from_bits("011110011")).bits() == "001011001");
    CHECK(phi_mask(omega, Word{}) == Word{});
    CHECK(phi_mask(omega, Word::from_bits("010")).bits() == "000");
}

TEST_CASE("phi mask is a length-preserving involution") {
    const MaskWord omega = MaskWord::omega();
    for (unsigned n = 0; n <= 10; ++n) {
        for (const Word& w : all_binary(n)) {
            const Word image = phi_mask(omega, w);
            CHECK(image.size() == w.size());
            CHECK(phi_mask(omega, image) == w);
        }
    }
}

TEST_CASE("phi splits over concatenation by parity") {
    const MaskWord omega = MaskWord::omega();
    const MaskWord omega_inv = MaskWord::omega_inv();
    for (unsigned total = 0; total <= 14; ++total) {
        for (unsigned a = 0; a <= total; ++a) {
            for (const Word& u : all_binary(a)) {
                for (const Word& v : all_binary(total - a)) {
                    const Word lhs = phi_mask(omega, u + v);
                    const Word rhs = (a % 2 == 0) ? phi_mask(omega, u) + phi_mask(omega, v)
                                                  : phi_mask(omega, u) + phi_mask(omega_inv, v);
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("phi of the all-ones word") {
    const MaskWord omega = MaskWord::omega();
    for (unsigned n = 0; n <= 14; ++n) {
        const Word ones = Word::repeated(Letter(0, true), n);
        const Word expected = (n % 2 == 0) ? MaskWord::omega().prefix(n).reversed()
                                           : MaskWord::omega_inv().prefix(n);
        CHECK(phi_mask(omega, ones) == expected);
    }
}

TEST_CASE("phi carries w w^rev w to v v* v") {
    const MaskWord omega = MaskWord::omega();
    for (unsigned n = 0; n <= 7; ++n) {
        for (const Word& u : all_binary(n)) {
            const Word v = phi_mask(omega, u);
            CHECK(phi_mask(omega, u + u.reversed() + u) == v + v.star() + v);
        }
    }
}

TEST_CASE("runs and shortlex order") {
    const Word w = Word::from_text("aaAAAa");
    const auto runs = w.runs();
    REQUIRE(runs.size() == 3);
    CHECK(runs[0] == std::pair<Letter, std::size_t>{Letter(0, false), 2});
    CHECK(runs[1] == std::pair<Letter, std::size_t>{Letter(0, true), 3});
    CHECK(runs[2] == std::pair<Letter, std::size_t>{Letter(0, false), 1});
    CHECK(w.max_run() == 3);

    CHECK(Word::from_text("A") < Word::from_text("aa"));   // shorter first
    CHECK(Word::from_text("aA") < Word::from_text("Aa"));  // then letter codes
    CHECK(Word::from_text("ab").max_generator() == 1);
}

TEST_CASE("subword and complement") {
    const Word w = Word::from_text("aAbB");
    CHECK(w.subword(1, 2).text() == "Ab");
    CHECK(w.prefix(2).text() == "aA");
    CHECK(w.suffix_from(2).text() == "bB");
    CHECK(w.complemented().text() == "AaBb");
    CHECK(w.reversed().text() == "BbAa");
    CHECK_THROWS_AS(w.subword(3, 4), std::out_of_range);
}
