#include <gtest/gtest.h>

#include "sympow/harness.hpp"
#include "sympow/io.hpp"

using namespace sympow;

namespace {

const char* const kCorpus = R"({"entries": [
  {"name": "triangle", "ring": ["x","y","z"], "I": ["x*y","y*z","z*x"], "J": ["x","y","z"],
   "expected": {"height": 2, "equigenerated": true}},
  {"name": "mixed-degree", "ring": ["x","y","z"], "I": ["x","y^2"], "J": ["x"]},
  {"name": "unit-J", "ring": ["x","y","z"], "I": ["x*y","y*z","z*x"], "J": ["1"]},
  {"name": "wrong-height", "ring": ["x","y","z"], "I": ["x*y","y*z","z*x"], "J": ["x","y","z"],
   "expected": {"height": 3}}
]})";

RunOptions loose() { return {12, FitOptions{6, 2}}; }

} // namespace

TEST(ParseMonomial, Forms) {
  RingContext ring({"x", "y", "z"});
  EXPECT_EQ(parse_monomial("x^2*y", ring), (Monomial{2, 1, 0}));
  EXPECT_EQ(parse_monomial(" x * x * y^0 ", ring), (Monomial{2, 0, 0}));
  EXPECT_EQ(parse_monomial("1", ring), Monomial::one(3));
  EXPECT_EQ(parse_monomial("z^10", ring), (Monomial{0, 0, 10}));
}

TEST(ParseMonomial, Errors) {
  RingContext ring({"x", "y", "z"});
  for (const char* bad : {"", "w", "x^", "x^-1", "x^a", "x**y", "2*x", "x^99999999999"})
    EXPECT_THROW(parse_monomial(bad, ring), ParseError) << "input '" << bad << "'";
}

TEST(ParseIdeal, MinimalizesAndPrints) {
  auto ring = make_ring({"x", "y"});
  auto i = parse_ideal("x^2, x^3*y, x*y, y^5", ring);
  EXPECT_EQ(to_string(i), "x^2, x*y, y^5");
  EXPECT_EQ(to_string(parse_ideal("1, x", ring)), "1");
  EXPECT_EQ(to_string(MonomialIdeal::zero(ring)), "0");
  EXPECT_THROW(parse_ideal("", ring), ParseError);
}

TEST(RingContext, RejectsBadNames) {
  EXPECT_THROW(make_ring({}), Error);
  EXPECT_THROW(make_ring({"x", "x"}), Error);
  EXPECT_THROW(make_ring({"2x"}), Error);
}

TEST(IdealSpec, RoundTrip) {
  auto spec = parse_ideal_spec("# comment\nring x y z\n\nI: y*z, x*y, z*x  # edges\nJ: x, y, z\n", "tri");
  EXPECT_EQ(spec.name, "tri");
  ASSERT_TRUE(spec.by.has_value());
  auto text = serialize_ideal_spec(spec);
  EXPECT_EQ(text, "ring x y z\nI: x*y, x*z, y*z\nJ: x, y, z\n");
  auto again = parse_ideal_spec(text);
  EXPECT_EQ(again.base, spec.base);
  EXPECT_EQ(*again.by, *spec.by);
}

TEST(IdealSpec, OptionalJ) {
  auto spec = parse_ideal_spec("ring a b\nI: a*b\n");
  EXPECT_FALSE(spec.by.has_value());
  EXPECT_THROW(spec.require_by(), ParseError);
}

TEST(IdealSpec, ErrorsCarryLineNumbers) {
  auto message = [](const char* text) {
    try {
      parse_ideal_spec(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message("ring x y\nI: x*w\n").rfind("line 2:", 0), 0u);
  EXPECT_EQ(message("I: x\n").rfind("line 1:", 0), 0u);
  EXPECT_EQ(message("ring x\nI: x\nI: x^2\n").rfind("line 3:", 0), 0u);
  EXPECT_EQ(message("ring x\nK: x\n").rfind("line 2:", 0), 0u);
  EXPECT_NE(message("ring x\n").find("missing 'I:'"), std::string::npos);
  EXPECT_NE(message("").find("missing ring"), std::string::npos);
}

TEST(Corpus, Parses) {
  auto corpus = parse_corpus(kCorpus);
  ASSERT_EQ(corpus.size(), 4u);
  EXPECT_EQ(corpus[0].spec.name, "triangle");
  EXPECT_EQ(corpus[0].expected_height, 2u);
  EXPECT_EQ(corpus[0].expected_equigenerated, true);
  EXPECT_FALSE(corpus[1].expected_height.has_value());
  EXPECT_TRUE(corpus[2].spec.by->is_unit());
}

TEST(Corpus, Errors) {
  EXPECT_THROW(parse_corpus("not json"), ParseError);
  EXPECT_THROW(parse_corpus("[]"), ParseError);
  EXPECT_THROW(parse_corpus(R"({"entries": [{"ring": ["x"], "I": ["x"], "J": ["x"]}]})"), ParseError);
  EXPECT_THROW(parse_corpus(R"({"entries": [{"name": "a", "ring": ["x"], "I": [], "J": ["x"]}]})"), ParseError);
  EXPECT_THROW(parse_corpus(R"({"entries": [{"name": "a", "ring": ["x"], "I": ["y"], "J": ["x"]}]})"), ParseError);
  EXPECT_THROW(parse_corpus(R"({"entries": [{"name": "a", "ring": ["x"], "I": ["x"]}]})"), ParseError);
}

TEST(Verify, Verdicts) {
  auto records = run_verify(parse_corpus(kCorpus), loose());
  ASSERT_EQ(records.size(), 4u);
  EXPECT_EQ(records[0].verdict, Verdict::Consistent);
  EXPECT_EQ(records[0].qp->period(), 2u);
  EXPECT_EQ(records[0].a_c, Rational(1, 12));
  EXPECT_EQ(records[0].dim_tail, 0);
  EXPECT_EQ(records[0].dim_onset, 2u);

  EXPECT_EQ(records[1].verdict, Verdict::HypothesisNotMet);
  EXPECT_FALSE(records[1].equigenerated);

  EXPECT_EQ(records[2].verdict, Verdict::Consistent);
  EXPECT_TRUE(records[2].qp->is_zero_function());
  EXPECT_FALSE(records[2].dim_tail.has_value());

  EXPECT_EQ(records[3].verdict, Verdict::Inconsistent);
  EXPECT_NE(records[3].note.find("expected height 3"), std::string::npos);
  EXPECT_EQ(exit_code(records), 3);
}

TEST(Verify, ShortWindowIsInsufficientData) {
  auto corpus = parse_corpus(kCorpus);
  corpus.erase(corpus.begin() + 1, corpus.end());
  auto strict = run_verify(corpus, {12, FitOptions{6, 3}});
  EXPECT_EQ(strict[0].verdict, Verdict::InsufficientData);
  EXPECT_EQ(exit_code(strict), 2);
  corpus[0].nmax = 16;
  EXPECT_EQ(run_verify(corpus, {12, FitOptions{6, 3}})[0].verdict, Verdict::Consistent);
}

TEST(Verify, ReportsAreDeterministic) {
  auto corpus = parse_corpus(kCorpus);
  for (auto format : {ReportFormat::Table, ReportFormat::Csv, ReportFormat::Json}) {
    auto a = format_report(run_verify(corpus, loose()), format);
    auto b = format_report(run_verify(corpus, loose()), format);
    EXPECT_EQ(a, b);
  }
}

TEST(Verify, CsvLayout) {
  auto csv = format_report(run_verify(parse_corpus(kCorpus), loose()), ReportFormat::Csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "name,equigenerated,height,dim_tail,g,c,a_c,a_c_const,a_c1_const,grade,verdict");
  EXPECT_NE(csv.find("triangle,true,2,0,2,3,1/12,true,true,0,consistent-with-theorem"), std::string::npos);
  EXPECT_NE(csv.find("unit-J,true,2,empty,1,zero,0,"), std::string::npos);
}

TEST(Verify, JsonLayout) {
  auto doc = nlohmann::json::parse(format_report(run_verify(parse_corpus(kCorpus), loose()), ReportFormat::Json));
  const auto& tri = doc["entries"][0];
  EXPECT_EQ(tri["verdict"], "consistent-with-theorem");
  EXPECT_EQ(tri["observations"]["quasi_polynomial"]["period"], 2);
  EXPECT_EQ(tri["observations"]["quasi_polynomial"]["coeffs"][3][0], "1/12");
}

TEST(Verify, CsvQuoting) {
  EXPECT_EQ(detail::csv_field("plain"), "plain");
  EXPECT_EQ(detail::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(detail::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Formats, Parse) {
  EXPECT_EQ(parse_report_format("json"), ReportFormat::Json);
  EXPECT_THROW(parse_report_format("xml"), ParseError);
}
