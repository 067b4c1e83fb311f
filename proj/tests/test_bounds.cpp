#include <gtest/gtest.h>

#include <qlang/qlang.hpp>

using namespace qlang;

namespace {

std::uint64_t bound(std::string_view cell, std::size_t m, std::size_t n, std::optional<std::size_t> k = std::nullopt) {
    return bound_formula(parse_cell(cell), BoundArgs{m, n, k});
}

} // namespace

TEST(BoundFormula, SpecExamples) {
    EXPECT_EQ(bound("product:subword", 4, 5), 8u);
    EXPECT_EQ(bound("intersection:prefix", 3, 3), 5u);
    EXPECT_EQ(bound("product:unary", 4, 5), 7u);
    EXPECT_EQ(bound("closure-suffix:regular:with-empty", 0, 4), 8u);
}

TEST(BoundFormula, BooleanRows) {
    for (const char* cls : {"prefix", "factor", "subword"}) {
        const std::string c = cls;
        EXPECT_EQ(bound("union:" + c, 3, 4), 12u);
        EXPECT_EQ(bound("intersection:" + c, 3, 4), 7u);
        EXPECT_EQ(bound("difference:" + c, 3, 4), 9u);
        EXPECT_EQ(bound("symmetric-difference:" + c, 3, 4), 12u);
    }
    for (const char* op : {"union", "intersection", "difference", "symmetric-difference"}) {
        EXPECT_EQ(bound(std::string(op) + ":suffix", 3, 4), 12u);
        EXPECT_EQ(bound(std::string(op) + ":regular", 3, 4), 12u);
    }
    EXPECT_EQ(bound("union:unary", 3, 5), 5u);
    EXPECT_EQ(bound("difference:unary", 3, 5), 3u);
    EXPECT_EQ(bound("union:prefix", 1, 5), 5u);
}

TEST(BoundFormula, ClosureRow) {
    EXPECT_EQ(bound("closure-prefix", 0, 6), 6u);
    EXPECT_EQ(bound("closure-suffix:regular:no-empty", 0, 4), 15u);
    EXPECT_EQ(bound("closure-factor", 0, 4), 8u);
    EXPECT_EQ(bound("closure-subword", 0, 5), 9u);
    EXPECT_EQ(bound("closure-subword", 0, 1), 1u);
    EXPECT_EQ(bound("closure-suffix:unary", 0, 4), 4u);
}

TEST(BoundFormula, ProductRow) {
    EXPECT_EQ(bound("product:prefix", 4, 4), 20u);
    EXPECT_EQ(bound("product:suffix", 4, 3, 2), 8u);
    EXPECT_EQ(bound("product:suffix", 3, 4, 1), 9u);
    EXPECT_EQ(bound("product:factor", 3, 3), 5u);
    EXPECT_EQ(bound("product:regular", 3, 3, 1), 20u);
    EXPECT_EQ(bound("product:prefix", 1, 5), 1u);
    EXPECT_EQ(bound("product:suffix", 5, 1), 1u);
}

TEST(BoundFormula, StarAndReversalRows) {
    EXPECT_EQ(bound("star:prefix", 0, 5), 9u);
    EXPECT_EQ(bound("star:suffix:eq", 0, 5), 5u);
    EXPECT_EQ(bound("star:suffix:neq", 0, 5), 4u);
    EXPECT_EQ(bound("star:factor", 0, 5), 2u);
    EXPECT_EQ(bound("star:subword", 0, 1), 2u);
    EXPECT_EQ(bound("star:regular", 0, 4, 1), 12u);
    EXPECT_EQ(bound("reversal:prefix", 0, 4), 8u);
    EXPECT_EQ(bound("reversal:suffix", 0, 3), 5u);
    EXPECT_EQ(bound("reversal:factor", 0, 4), 5u);
    EXPECT_EQ(bound("reversal:unary", 0, 4), 4u);
    EXPECT_EQ(bound("reversal:regular", 0, 4), 16u);
    EXPECT_EQ(bound("reversal:subword", 0, 1), 1u);
}

TEST(BoundFormula, SideConditions) {
    EXPECT_THROW(parse_cell("star:suffix"), bound_error);
    EXPECT_THROW(parse_cell("closure-suffix"), bound_error);
    EXPECT_THROW(parse_cell("union:prefix:eq"), bound_error);
    EXPECT_THROW(parse_cell("closure-prefix:suffix"), bound_error);
    EXPECT_THROW(parse_cell("concat:prefix"), bound_error);
    EXPECT_THROW(parse_cell("union"), bound_error);
    EXPECT_THROW(bound("product:suffix", 3, 3), bound_error);
    EXPECT_THROW(bound("product:suffix", 3, 3, 4), bound_error);
    EXPECT_THROW(bound("union:prefix", 0, 3), bound_error);
    EXPECT_THROW(bound("star:prefix", 0, 0), bound_error);
    EXPECT_THROW(bound_formula({Operation::star, LanguageClass::suffix}, BoundArgs{0, 4, std::nullopt}), bound_error);
}

TEST(BoundCells, ParseAndPrintRoundTrip) {
    for (const auto& c : all_cells()) {
        EXPECT_EQ(parse_cell(to_string(c)), c) << to_string(c);
        EXPECT_FALSE(formula_text(c).empty());
        EXPECT_GE(tightness_alphabet(c, 4), 1u);
    }
    EXPECT_EQ(all_cells().size(), 5u + 7u * 6u + 1u + 4u);
    EXPECT_EQ(parse_cell("symdiff:suffix").op, Operation::symmetric_difference);
}

TEST(BoundCells, TightnessAlphabets) {
    EXPECT_EQ(tightness_alphabet(parse_cell("closure-subword"), 6), 4u);
    EXPECT_EQ(tightness_alphabet(parse_cell("union:prefix"), 3), 4u);
    EXPECT_EQ(tightness_alphabet(parse_cell("reversal:suffix"), 3), 3u);
    EXPECT_EQ(tightness_alphabet(parse_cell("reversal:subword"), 3), 6u);
    EXPECT_EQ(tightness_alphabet(parse_cell("star:unary"), 3), 1u);
}

TEST(BoundCells, PrefixProductTableDiscrepancy) {
    const BoundCell c = parse_cell("product:prefix");
    EXPECT_TRUE(table_discrepancy(c));
    EXPECT_EQ(table_value(c, {4, 4, std::nullopt}), 16u);
    EXPECT_EQ(bound_formula(c, {4, 4, std::nullopt}), 20u);
    EXPECT_FALSE(table_discrepancy(parse_cell("product:suffix")));
}
