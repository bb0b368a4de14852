#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "editforge/analytics.hpp"
#include "editforge/error.hpp"

using namespace editforge;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

std::vector<ScoreTriple> repeat(ScoreTriple s, std::size_t n) { return std::vector<ScoreTriple>(n, s); }

ScoreTriple random_triple(std::mt19937_64& rng) {
  return ScoreTriple(1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3));
}

TripletRecord triplet_of(TaskId task) {
  TripletRecord t;
  t.task = task;
  return t;
}

SourceRecord sized(std::uint32_t w, std::uint32_t h) {
  SourceRecord s;
  s.width = w;
  s.height = h;
  return s;
}

double percent_sum(const Distribution& d) {
  double s = 0;
  for (std::size_t i = 0; i < d.bins.size(); ++i) s += d.percent(i);
  return s;
}

double text_sum(const Distribution& d) {
  double s = 0;
  for (std::size_t i = 0; i < d.bins.size(); ++i) s += std::stod(d.percent_text(i));
  return s;
}

}  // namespace

TEST_CASE("marginal examples") {
  const auto all3 = score_marginals(repeat(ScoreTriple(3, 3, 3), 5));
  for (const auto& d : all3) {
    CHECK(d.count_of("3") == 5);
    CHECK(d.percent_text(2) == "100.00");
    CHECK(d.percent_text(0) == "0.00");
    CHECK(d.bins.size() == 3);
  }
  const std::vector<ScoreTriple> two = {ScoreTriple(3, 3, 3), ScoreTriple(3, 2, 2)};
  const auto m = score_marginals(two);
  CHECK(m[0].percent(2) == 100.0);
  CHECK(m[1].percent(1) == 50.0);
  CHECK(m[1].percent(2) == 50.0);
  CHECK(m[2].percent(1) == 50.0);
  CHECK(code_of([] { score_marginals({}); }) == ErrorCode::EmptyInput);
}

TEST_CASE("marginals of a sampled corpus track the generator") {
  // Independent per-dimension categorical generator; its weights are the oracle.
  const std::array<std::array<double, 3>, 3> w = {{{0.05, 0.15, 0.80}, {0.10, 0.30, 0.60}, {0.20, 0.30, 0.50}}};
  std::mt19937_64 rng(4);
  std::array<std::discrete_distribution<int>, 3> gen = {
      std::discrete_distribution<int>(w[0].begin(), w[0].end()),
      std::discrete_distribution<int>(w[1].begin(), w[1].end()),
      std::discrete_distribution<int>(w[2].begin(), w[2].end())};
  std::vector<ScoreTriple> s;
  for (int i = 0; i < 10000; ++i) s.emplace_back(1 + gen[0](rng), 1 + gen[1](rng), 1 + gen[2](rng));
  const auto m = score_marginals(s);
  for (std::size_t d = 0; d < 3; ++d)
    for (std::size_t b = 0; b < 3; ++b) CHECK(std::abs(m[d].percent(b) - 100 * w[d][b]) <= 1.5);
}

TEST_CASE("joint distribution") {
  const auto single = joint_distribution(repeat(ScoreTriple(3, 3, 3), 4));
  REQUIRE(single.bins.size() == 1);
  CHECK(single.bins[0].label == "(3,3,3)");
  CHECK(single.percent(0) == 100.0);

  const std::vector<ScoreTriple> s = {ScoreTriple(3, 2, 2), ScoreTriple(3, 3, 3), ScoreTriple(3, 2, 2),
                                      ScoreTriple(1, 1, 1), ScoreTriple(2, 2, 2)};
  const auto j = joint_distribution(s);
  REQUIRE(j.bins.size() == 4);
  CHECK(j.bins[0].label == "(3,2,2)");
  CHECK(j.bins[0].count == 2);
  CHECK(j.bins[1].label == "(3,3,3)");  // ties: larger tuple first
  CHECK(j.bins[3].label == "(1,1,1)");
  CHECK(j.percent_text(0) == "40.00");
  CHECK(code_of([] { joint_distribution({}); }) == ErrorCode::EmptyInput);
}

TEST_CASE("min score examples") {
  CHECK(min_score_distribution(repeat(ScoreTriple(3, 3, 3), 1)).count_of("3") == 1);
  CHECK(min_score_distribution(repeat(ScoreTriple(3, 2, 3), 1)).count_of("2") == 1);
  CHECK(min_score_distribution(repeat(ScoreTriple(3, 1, 3), 1)).count_of("1") == 1);
  std::mt19937_64 rng(5);
  std::vector<ScoreTriple> kept;
  while (kept.size() < 500) {
    const auto t = random_triple(rng);
    if (filter_rule(t) == FilterVerdict::Keep) kept.push_back(t);
  }
  CHECK(min_score_distribution(kept).count_of("1") == 0);
  for (const auto& b : joint_distribution(kept).bins)
    CHECK((b.label == "(3,3,3)" || b.label == "(3,3,2)" || b.label == "(3,2,3)" || b.label == "(3,2,2)"));
}

TEST_CASE("property: joint marginalizes to the marginals and min mass matches (3,3,3)") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ScoreTriple> s;
    const std::size_t n = 1 + rng() % 300;
    for (std::size_t i = 0; i < n; ++i) s.push_back(random_triple(rng));
    const auto m = score_marginals(s);
    const auto j = joint_distribution(s);
    std::array<std::array<std::uint64_t, 3>, 3> from_joint{};
    for (const auto& b : j.bins)
      for (std::size_t d = 0; d < 3; ++d) from_joint[d][b.label[1 + 2 * d] - '1'] += b.count;
    for (std::size_t d = 0; d < 3; ++d)
      for (std::size_t v = 0; v < 3; ++v) CHECK(from_joint[d][v] == m[d].bins[v].count);
    CHECK(min_score_distribution(s).count_of("3") == j.count_of("(3,3,3)"));
    for (const auto* d : {&m[0], &m[1], &m[2], &j}) {
      CHECK(d->exact());
      CHECK(std::abs(percent_sum(*d) - 100.0) < 1e-9);
      CHECK(std::abs(text_sum(*d) - 100.0) <= 0.05 * d->bins.size() / 2 + 1e-9);
    }
  }
}

TEST_CASE("half-up percentage rendering") {
  CHECK(half_up_percent(1, 8) == "12.50");
  CHECK(half_up_percent(1, 3) == "33.33");
  CHECK(half_up_percent(2, 3) == "66.67");
  CHECK(half_up_percent(1, 16) == "6.25");
  CHECK(half_up_percent(1, 32) == "3.13");  // 3.125 rounds up
  CHECK(half_up_percent(0, 5) == "0.00");
  CHECK(half_up_ratio(4032, 3024) == "1.33");
  CHECK(half_up_ratio(1500, 1000) == "1.50");
  CHECK(half_up_ratio(1, 8) == "0.13");
}

TEST_CASE("category distribution") {
  std::vector<TripletRecord> uniform;
  for (const auto& k : taxonomy()) uniform.push_back(triplet_of(k.id));
  const auto u = category_distribution(uniform);
  REQUIRE(u.tasks.bins.size() == 23);
  for (std::size_t i = 0; i < 23; ++i) CHECK(u.tasks.percent_text(i) == "4.35");
  CHECK(u.tasks.bins[0].label == "Style Transfer");
  CHECK(u.categories.bins.size() == 6);
  CHECK(u.categories.bins[1].count == 5);

  const auto one = category_distribution(std::vector<TripletRecord>(7, triplet_of(TaskId::CountChange)));
  CHECK(one.tasks.count_of("Count Change") == 7);
  CHECK(one.tasks.percent(task_index(TaskId::CountChange)) == 100.0);

  std::mt19937_64 rng(7);
  std::vector<TripletRecord> skewed;
  for (int i = 0; i < 4000; ++i)
    skewed.push_back(triplet_of((rng() & 1) ? TaskId::ActionEditing : static_cast<TaskId>(rng() % kTaskCount)));
  // Action gets 1/2 + 1/2 * 1/23 of the mass.
  const double expect = 100.0 * (0.5 + 0.5 / 23);
  CHECK(std::abs(category_distribution(skewed).tasks.percent(task_index(TaskId::ActionEditing)) - expect) <= 2.5);
  CHECK(code_of([] { category_distribution({}); }) == ErrorCode::EmptyInput);
}

TEST_CASE("aspect ratio table") {
  const auto same = aspect_ratio_table(std::vector<SourceRecord>(3, sized(1500, 1000)));
  REQUIRE(same.bins.size() == 1);
  CHECK(same.bins[0].label == "1.50");
  CHECK(same.percent(0) == 100.0);
  CHECK(aspect_ratio_table(std::vector<SourceRecord>{sized(4032, 3024)}).bins[0].label == "1.33");

  std::mt19937_64 rng(9);
  std::vector<SourceRecord> mixed;
  std::map<std::string, std::uint64_t> oracle;
  for (int i = 0; i < 2000; ++i) {
    const std::uint32_t w = 100 + rng() % 4000, h = 100 + rng() % 4000;
    mixed.push_back(sized(w, h));
    // Exact half-up via long double on the decimal value.
    char buf[32];
    const long double r = static_cast<long double>(w) / h;
    const auto hundredths = static_cast<std::uint64_t>(std::floor(r * 100 + 0.5L));
    std::snprintf(buf, sizeof buf, "%llu.%02llu", static_cast<unsigned long long>(hundredths / 100),
                  static_cast<unsigned long long>(hundredths % 100));
    ++oracle[buf];
  }
  const auto table = aspect_ratio_table(mixed);
  std::map<std::string, std::uint64_t> got;
  for (const auto& b : table.bins) got[b.label] = b.count;
  CHECK(got == oracle);
  for (std::size_t i = 1; i < table.bins.size(); ++i)
    CHECK(std::stod(table.bins[i - 1].label) < std::stod(table.bins[i].label));
  CHECK(code_of([] { aspect_ratio_table({}); }) == ErrorCode::EmptyInput);
}

TEST_CASE("concentration examples") {
  const auto cats = concentration_of(std::vector<std::string>(10, "cat"));
  CHECK(cats.top1 == 100.0);
  CHECK(cats.vocab == 1);
  const auto abc = concentration_of({"a", "a", "b", "c"});
  CHECK(abc.top1 == 50.0);
  CHECK(abc.top5 == 100.0);
  CHECK(abc.vocab == 3);
  CHECK(abc.entities == 4);

  std::map<TaskId, std::vector<std::string>> ins;
  ins[TaskId::ObjectRemoval] = std::vector<std::string>(10, "Remove the cat from the sofa.");
  const auto r = entity_concentration(ins, rule_entity_extractor);
  CHECK(r.at(TaskId::ObjectRemoval).top1 == 100.0);
  CHECK(r.at(TaskId::ObjectRemoval).vocab == 1);
}

TEST_CASE("rule entity extractor") {
  using V = std::vector<std::string>;
  CHECK(rule_entity_extractor(TaskId::ObjectRemoval, "Remove the store logo.") == V{"store logo"});
  CHECK(rule_entity_extractor(TaskId::ColorChange, "Change the color of brown bear to black.") == V{"black"});
  CHECK(rule_entity_extractor(TaskId::MaterialChange, "Turn the table into marble.") == V{"marble"});
  CHECK(rule_entity_extractor(TaskId::ObjectAddition, "Add a red kite in the sky.") == V{"red kite"});
  CHECK(rule_entity_extractor(TaskId::ObjectReplacement, "Replace the dog with a cat.") == V{"cat"});
  CHECK(rule_entity_extractor(TaskId::BuildingSurfaceText, R"(Replace the street sign text "Ave" with "Street".)") ==
        V{"street"});
  CHECK(rule_entity_extractor(TaskId::ObjectRemoval, "Nothing to see.").empty());
}

TEST_CASE("Zipf entities: top-10 mass tracks the generator") {
  constexpr int kVocab = 100;
  constexpr double kS = 1.1;
  std::vector<double> w(kVocab);
  for (int k = 0; k < kVocab; ++k) w[k] = std::pow(k + 1, -kS);
  double total = 0, top10 = 0;
  for (int k = 0; k < kVocab; ++k) total += w[k];
  for (int k = 0; k < 10; ++k) top10 += w[k];
  const double analytic = 100 * top10 / total;

  // One 1k corpus gives a top-10 standard deviation near 1.5 points, so the band
  // is checked on the mean of 20 corpora and each corpus against exact counting.
  std::mt19937_64 rng(12);
  std::discrete_distribution<int> zipf(w.begin(), w.end());
  double mean = 0;
  constexpr int kCorpora = 20;
  for (int corpus = 0; corpus < kCorpora; ++corpus) {
    std::map<TaskId, std::vector<std::string>> ins;
    std::map<int, int> freq;
    for (int i = 0; i < 1000; ++i) {
      const int k = zipf(rng);
      ++freq[k];
      ins[TaskId::ObjectRemoval].push_back("Remove the item" + std::to_string(k) + ".");
    }
    std::vector<int> counts;
    for (const auto& [_, n] : freq) counts.push_back(n);
    std::sort(counts.rbegin(), counts.rend());
    int top = 0;
    for (std::size_t k = 0; k < std::min<std::size_t>(10, counts.size()); ++k) top += counts[k];

    const auto c = entity_concentration(ins, rule_entity_extractor).at(TaskId::ObjectRemoval);
    CHECK(c.entities == 1000);
    CHECK(c.vocab == freq.size());
    CHECK(std::abs(c.top10 - top / 10.0) <= 1e-12);
    mean += c.top10 / kCorpora;
  }
  CHECK(std::abs(mean - analytic) <= 2.0);
}

TEST_CASE("property: cumulative concentration is monotone") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> e;
    const std::size_t n = 1 + rng() % 200, vocab = 1 + rng() % 40;
    std::set<std::string> distinct;
    for (std::size_t i = 0; i < n; ++i) {
      e.push_back("e" + std::to_string(rng() % vocab));
      distinct.insert(e.back());
    }
    const auto c = concentration_of(e);
    CHECK(c.top1 <= c.top5);
    CHECK(c.top5 <= c.top10);
    CHECK(c.top10 <= c.top20);
    CHECK(c.top20 <= 100.0 + 1e-9);
    CHECK(c.vocab == distinct.size());
  }
}

TEST_CASE("entity concentration errors") {
  CHECK(code_of([] { entity_concentration({}, rule_entity_extractor); }) == ErrorCode::EmptyInput);
  std::map<TaskId, std::vector<std::string>> ins;
  ins[TaskId::ColorChange] = {"Make it red."};
  const EntityExtractor broken = [](TaskId, std::string_view) -> std::vector<std::string> {
    throw std::runtime_error("tagger crashed");
  };
  CHECK(code_of([&] { entity_concentration(ins, broken); }) == ErrorCode::ExtractorError);
}

TEST_CASE("stats document and text rendering") {
  std::vector<SourceRecord> pool = {sized(1500, 1000), sized(800, 600)};
  std::vector<TripletRecord> t;
  const auto scored = [&](TaskId task, ScoreTriple s, TripletStatus st) {
    auto r = triplet_of(task);
    r.instruction = "Remove the cat.";
    r.scores = s;
    r.status = st;
    t.push_back(r);
  };
  scored(TaskId::ObjectRemoval, ScoreTriple(3, 3, 3), TripletStatus::Kept);
  scored(TaskId::ObjectRemoval, ScoreTriple(3, 2, 2), TripletStatus::Kept);
  scored(TaskId::ColorChange, ScoreTriple(2, 3, 3), TripletStatus::Dropped);
  auto failed = triplet_of(TaskId::ColorChange);
  failed.status = TripletStatus::Failed;
  t.push_back(failed);

  const auto doc = stats_document(pool, t);
  CHECK(doc.at("counts").at("kept") == 2);
  CHECK(doc.at("counts").at("dropped") == 1);
  CHECK(doc.at("counts").at("failed") == 1);
  CHECK(doc.at("scores_all").at("marginals").at("F").at("total") == 3);
  CHECK(doc.at("scores_kept").at("marginals").at("F").at("bins").at(2).at("percent") == "100.00");
  CHECK(doc.at("aspect_ratios").at("bins").size() == 2);
  CHECK(doc.at("entity_concentration").at("object_removal").at("top1") == "100.00");

  const auto text = render_stats_text(doc);
  CHECK(text.find("sources 2  triplets 4  kept 2  dropped 1  failed 1") != std::string::npos);
  CHECK(text.find("F marginal (kept)") != std::string::npos);
  CHECK(text.find("(3,3,3)") != std::string::npos);

  const auto empty = stats_document({}, {});
  CHECK(empty.at("scores_kept").at("joint").is_null());
  CHECK(render_stats_text(empty).find("(no data)") != std::string::npos);
}
