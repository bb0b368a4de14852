#include <doctest.h>

#include <random>
#include <set>

#include "editforge/error.hpp"
#include "editforge/parsers.hpp"
#include "editforge/phash.hpp"
#include "editforge/source_pool.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace editforge;
using namespace editforge::testing;

namespace {

std::string parse_reason(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) return e.detail();
    return "code:" + std::string(error_code_name(e.code()));
  }
  return "ok";
}

Json chat_rule(const char* role, const std::string& response) {
  return Json{{"match", {{"role", role}}}, {"response", response}};
}

DetailedCaption sample_caption() {
  return parse_detailed_caption(detailed_caption_reply());
}

}  // namespace

// ---------------------------------------------------------------------------
// Pre-filter

TEST_CASE("prefilter examples") {
  CHECK(prefilter(800, 600).accepted());
  CHECK(prefilter(512, 512).reject == RejectReason::ShortSide);
  CHECK(prefilter(2000, 900).reject == RejectReason::AspectRatio);
  CHECK(prefilter(1026, 513).accepted());   // ratio exactly 2
  CHECK(prefilter(513, 1026).accepted());   // ratio exactly 1/2
  CHECK(prefilter(1027, 513).reject == RejectReason::AspectRatio);
  CHECK(reject_reason_name(RejectReason::ShortSide) == "short-side");
  CHECK(reject_reason_name(RejectReason::AspectRatio) == "aspect-ratio");
}

TEST_CASE("prefilter grid matches the closed-form rule") {
  const std::vector<std::uint32_t> sides = {256, 511, 512, 513, 600, 1024, 2000, 2048};
  for (const auto w : sides)
    for (const auto h : sides) {
      const bool expect = std::min(w, h) > 512 && 2ull * w >= h && w <= 2ull * h;
      CAPTURE(w);
      CAPTURE(h);
      CHECK(prefilter(w, h).accepted() == expect);
    }
}

// ---------------------------------------------------------------------------
// pHash

TEST_CASE("phash matches the reference oracle bit for bit") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto img = pattern_image(120 + static_cast<std::uint32_t>(i * 13 % 97), 90 + static_cast<std::uint32_t>(i * 7 % 61), i);
    const auto h = phash(img);
    CHECK(h == reference_phash(img));
    CHECK((h >> 63) == 0);
  }
  // Non-square, tiny, gray and odd sizes exercise the resampler edges.
  for (const auto& img : {Image(1, 1, 3, 80), Image(3, 50, 1, 9), pattern_image(33, 31, 3), pattern_image(700, 20, 4)})
    CHECK(phash(img) == reference_phash(img));
}

TEST_CASE("phash determinism and brightness robustness") {
  const auto bytes = encode_png(pattern_image(200, 150, 9));
  CHECK(phash_bytes(bytes) == phash_bytes(bytes));
  const Image gray(64, 64, 3, 128), brighter(64, 64, 3, 129);
  CHECK(hamming(phash(gray), phash(brighter)) <= 2);
  CHECK(hamming(reference_phash(gray), reference_phash(brighter)) <= 2);
  const auto img = pattern_image(300, 200, 10);
  CHECK(hamming(phash(img), phash(perturb(img, 1, 0, 1))) <= 2);
  try {
    phash_bytes(as_bytes("not an image"));
    FAIL("decoded garbage");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DecodeError);
  }
}

TEST_CASE("rotation changes the hash beyond the default threshold") {
  int separated = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto img = pattern_image(160, 120, 500 + i);
    const auto a = reference_phash(img), b = reference_phash(rotate90(img));
    CHECK(phash(rotate90(img)) == b);
    separated += hamming(a, b) > 4;
  }
  CHECK(separated >= 45);
}

// ---------------------------------------------------------------------------
// Dedup

TEST_CASE("dedup examples") {
  DedupIndex idx(4);
  CHECK(idx.admit(0x0123456789abcdefull, "a"));
  CHECK_FALSE(idx.admit(0x0123456789abcdefull, "b"));
  CHECK(idx.find_near(0x0123456789abcdeeull) == std::optional<std::string>("a"));
  DedupIndex far(4);
  CHECK(far.admit(0, "zero"));
  CHECK(far.admit(~0ull, "ones"));
  CHECK(far.size() == 2);
  for (const int bad : {-1, 17}) {
    try {
      DedupIndex x(bad);
      FAIL("bad threshold accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ConfigError);
    }
  }
}

TEST_CASE("dedup on a near-duplicate corpus equals the brute-force oracle") {
  const auto corpus = near_duplicate_corpus(200, 42);
  std::vector<std::uint64_t> hashes;
  std::vector<SourceRecord> stream;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    SourceRecord r;
    r.id = "img" + std::to_string(i);
    r.phash = phash(corpus[i]);
    hashes.push_back(r.phash);
    stream.push_back(r);
  }
  DedupIndex idx(4);
  const auto res = dedup(stream, idx);
  const auto oracle = brute_force_dedup(hashes, 4);
  REQUIRE(res.retained.size() == oracle.size());
  for (std::size_t k = 0; k < oracle.size(); ++k) CHECK(res.retained[k].id == stream[oracle[k]].id);
  CHECK(res.dropped == corpus.size() - oracle.size());
  CHECK(res.dropped > 0);
}

TEST_CASE("property: BK-tree dedup equals brute force for every threshold") {
  std::mt19937_64 rng(99);
  for (int threshold = 0; threshold <= 16; ++threshold) {
    std::vector<std::uint64_t> hashes;
    for (int i = 0; i < 300; ++i) {
      // Clustered hashes so that many pairs fall near the threshold.
      std::uint64_t h = (rng() % 20) * 0x9E3779B97F4A7C15ull;
      for (int f = static_cast<int>(rng() % 12); f > 0; --f) h ^= 1ull << (rng() % 63);
      h &= ~(1ull << 63);
      hashes.push_back(h);
    }
    DedupIndex idx(threshold);
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < hashes.size(); ++i)
      if (idx.admit(hashes[i], std::to_string(i))) kept.push_back(i);
    CHECK(kept == brute_force_dedup(hashes, threshold));
    const auto entries = idx.entries();
    for (std::size_t a = 0; a < entries.size(); ++a)
      for (std::size_t b = a + 1; b < entries.size(); ++b) CHECK(hamming(entries[a].first, entries[b].first) > threshold);
  }
}

TEST_CASE("dedup index snapshot round trip") {
  DedupIndex idx(3);
  idx.admit(1, "a");
  idx.admit(0xff00ff00ull, "b");
  const auto j = idx.to_json();
  CHECK(j.at("threshold") == 3);
  CHECK(j.at("entries")[0] == Json::array({"0000000000000001", "a"}));
  const auto back = DedupIndex::from_json(j);
  CHECK(back.entries() == idx.entries());
  CHECK(back.find_near(3) == std::optional<std::string>("a"));
}

// ---------------------------------------------------------------------------
// Caption agents

TEST_CASE("short captions") {
  MockRig rig(Json::array({Json{{"match", {{"role", "caption"}}},
                                {"sequence", {{{"response", "  "}}, {{"response", "  A red bus on a street. \n"}}}}}}));
  const auto img = rig.put_png(pattern_image(64, 64, 1));
  CHECK(parse_reason([&] { caption(rig.agent(), img); }) == "empty");
  CHECK(caption(rig.agent(), img) == "A red bus on a street.");

  MockRig retry(Json::array({Json{{"match", {{"role", "caption"}}},
                                  {"sequence", {{{"response", ""}}, {{"response", "A dog."}}}}}}));
  CHECK(caption(retry.agent(), retry.put_png(pattern_image(64, 64, 1)), 1) == "A dog.");
}

TEST_CASE("detailed captions") {
  MockRig rig(Json::array({chat_rule("detailed_caption", detailed_caption_reply())}));
  const auto dc = detailed_caption(rig.agent(), rig.put_png(pattern_image(64, 64, 2)));
  CHECK(dc.complete());
  CHECK(dc.at(Aspect::Foreground).size() == 2);

  auto text = detailed_caption_reply();
  text.erase(text.find("Midground:"), std::string("Midground:\n1. A shop front with a sign.\n").size());
  MockRig bad(Json::array({chat_rule("detailed_caption", text)}));
  CHECK(parse_reason([&] { detailed_caption(bad.agent(), bad.put_png(pattern_image(64, 64, 2))); }) ==
        "missing-aspect(Midground)");
}

TEST_CASE("variant captions swap exactly one slot") {
  DetailedCaption dc = sample_caption();
  dc.at(Aspect::Style) = {"oil painting"};
  MockRig rig(Json::array({chat_rule("variant_caption", "watercolor wash\n")}));
  const auto v = variant_caption(rig.agent(), dc, Aspect::Style, 0);
  CHECK(v.line == "watercolor wash");
  for (std::size_t i = 0; i < kAspectCount; ++i) {
    if (static_cast<Aspect>(i) == Aspect::Style) CHECK(v.caption.aspects[i] == std::vector<std::string>{"watercolor wash"});
    else CHECK(v.caption.aspects[i] == dc.aspects[i]);
  }

  MockRig multi(Json::array({chat_rule("variant_caption", "one\ntwo")}));
  CHECK(parse_reason([&] { variant_caption(multi.agent(), dc, Aspect::Style, 0); }) == "multi-line");
  CHECK(parse_reason([&] { variant_caption(rig.agent(), dc, Aspect::Style, 3); }) == "code:PreconditionViolation");
}

TEST_CASE("flattened generation prompt") {
  const auto flat = flatten_caption(sample_caption());
  CHECK(flat.find("Foreground: A wooden bench.; A red bicycle.") != std::string::npos);
  CHECK(flat.find("Visual Focus and Perspective: ") != std::string::npos);
  CHECK(flat.find("Midground") < flat.find("Background"));
}

TEST_CASE("synthesized variants") {
  MockRig rig(Json{{"rules", Json::array()}, {"image_size", {1024, 768}}});
  const auto parent = std::string(64, 'p');
  const auto a = synthesize_variant(*rig.gateway, rig.generate, sample_caption(), parent, 1);
  const auto b = synthesize_variant(*rig.gateway, rig.generate, sample_caption(), parent, 1);
  CHECK(a.id == b.id);
  CHECK(a.origin == Origin::Synthesis);
  CHECK(a.parent_id == std::optional<std::string>(parent));
  CHECK(a.width == 1024);
  CHECK(prefilter(a.width, a.height).accepted());
  CHECK(rig.store.contains(a.id));

  MockRig small(Json{{"rules", Json::array()}, {"image_size", {300, 300}}});
  const auto s = synthesize_variant(*small.gateway, small.generate, sample_caption(), parent, 1);
  CHECK(s.width == 300);
  CHECK(prefilter(s.width, s.height).reject == RejectReason::ShortSide);
}

// ---------------------------------------------------------------------------
// Retrieval

TEST_CASE("fixture retrieval") {
  TempDir tmp("retrieval");
  const auto dir = tmp / "fixtures";
  fs::create_directories(dir);
  write_png(dir / "a.png", pattern_image(600, 600, 1));
  write_png(dir / "b.png", pattern_image(700, 600, 2));
  write_text(dir / "c.png", "corrupt");
  write_text(dir / "a.ocr.json", "[]");
  FixtureProvider provider(dir);

  const auto text = retrieve(TextQuery{"a street"}, provider, std::string("parent"));
  REQUIRE(text.size() == 2);
  CHECK(text[0].record.origin == Origin::RetrievalText);
  CHECK(text[0].record.parent_id == std::optional<std::string>("parent"));
  CHECK(text[0].record.id == sha256_hex(text[0].bytes));
  CHECK(retrieve(ImageQuery{"x"}, provider)[1].record.origin == Origin::RetrievalImage);

  fs::create_directories(tmp / "empty");
  FixtureProvider empty(tmp / "empty");
  CHECK(retrieve(TextQuery{"x"}, empty).empty());

  FixtureProvider missing(tmp / "nope");
  try {
    retrieve(TextQuery{"x"}, missing);
    FAIL("missing provider directory accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ProviderError);
  }
}

TEST_CASE("source records") {
  const auto bytes = encode_png(pattern_image(640, 520, 5));
  const auto r = make_source_record(bytes, Origin::Seed);
  CHECK(r.id == sha256_hex(bytes));
  CHECK(r.width == 640);
  CHECK(r.height == 520);
  CHECK(r.phash == phash_bytes(bytes));
  CHECK_FALSE(r.parent_id.has_value());
}
