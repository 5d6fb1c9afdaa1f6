// Copyright 2026 The pdftables Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance checks for the extraction toolkit. Prints one PASS/FAIL line per
// criterion and exits non-zero when any criterion fails.

#include <httplib.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pdftables/cli.hpp"
#include "pdftables/download.hpp"
#include "pdftables/extract.hpp"
#include "pdftables/ingest.hpp"
#include "pdftables/lattice.hpp"
#include "pdftables/typed.hpp"

namespace fs = std::filesystem;
using pdftables::ExtractionOptions;
using pdftables::Method;
using pdftables::PageRect;
using pdftables::RawTable;

namespace {

// Pinned limits.
constexpr double kFixtureSeconds = 5.0;
constexpr double kPropertySeconds = 60.0;
constexpr double kDimsTolerance = 0.01;
constexpr int kRandomTables = 50;
constexpr int kRoundTrips = 20;
constexpr unsigned kSeed = 20240611;

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

PageRect to_page_rect(const fixture::Rect& r) { return PageRect{r.top, r.left, r.bottom, r.right}; }

std::string show_grid(const fixture::Grid& g) {
  std::ostringstream os;
  for (const auto& row : g) {
    os << "[";
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "|" : "") << row[i];
    os << "]";
  }
  return os.str();
}

void expect_cells(const fixture::Grid& got, const fixture::Grid& want, const std::string& label) {
  expect(got == want, label + ": got " + show_grid(got) + " want " + show_grid(want));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int run(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  int code = pdftables::run_cli(args, o, e);
  if (out) *out = o.str();
  if (code != 0 && code != pdftables::kExitNoTables) std::cerr << e.str();
  return code;
}

std::pair<int, int> png_size(const fs::path& path) {
  std::string bytes = fixture::read_file(path);
  expect(bytes.size() >= 24 && bytes.compare(1, 3, "PNG") == 0, "not a PNG: " + path.string());
  auto be32 = [&](std::size_t at) {
    return (static_cast<unsigned char>(bytes[at]) << 24) | (static_cast<unsigned char>(bytes[at + 1]) << 16) |
           (static_cast<unsigned char>(bytes[at + 2]) << 8) | static_cast<unsigned char>(bytes[at + 3]);
  };
  return {be32(16), be32(20)};
}

// --- criteria -------------------------------------------------------------

std::string fixture_reproduction() {
  auto start = std::chrono::steady_clock::now();
  fixture::TempDir tmp;
  fixture::SampleFixture fx = fixture::sample_fixture();
  std::string path = tmp.file("basic.pdf");
  fixture::write_file(path, fx.pdf);
  fs::create_directories(tmp.path() / "out");
  int code = run({"extract", path, "--method", "decide", "--format", "csv", "--out", tmp.file("out")});
  expect(code == 0, "extract exit code " + std::to_string(code));

  const char* names[] = {"basic-p1-t1.csv", "basic-p2-t1.csv", "basic-p2-t2.csv", "basic-p3-t1.csv"};
  std::size_t cells = 0;
  for (std::size_t i = 0; i < fx.tables.size(); ++i) {
    fs::path out = tmp.path() / "out" / names[i];
    expect(fs::exists(out), "missing " + out.filename().string());
    fixture::Grid got = fixture::parse_delimited(fixture::read_file(out), ',');
    expect_cells(got, fx.tables[i].cells, names[i]);
    for (const auto& row : got) cells += row.size();
  }
  std::size_t files = std::distance(fs::directory_iterator(tmp.path() / "out"), fs::directory_iterator());
  expect(files == fx.tables.size(), "expected 4 tables, found " + std::to_string(files));

  // Column types as printed for the typed data frames.
  pdftables::DocumentHandle doc = pdftables::open_document(path);
  std::vector<RawTable> raw = pdftables::extract_tables(doc, ExtractionOptions{});
  expect(raw.size() == 4, "library returned " + std::to_string(raw.size()) + " tables");
  auto mtcars = pdftables::make_typed(raw[0], true);
  auto tooth = pdftables::make_typed(raw[3], true);
  expect(mtcars.names[1] == "mpg" && mtcars.types[1] == pdftables::ColumnType::kNumber, "mpg not numeric");
  expect(tooth.names[1] == "supp" && tooth.types[1] == pdftables::ColumnType::kString, "supp not string");
  expect(tooth.names[2] == "dose" && tooth.types[2] == pdftables::ColumnType::kNumber, "dose not numeric");

  double secs = seconds_since(start);
  expect(secs < kFixtureSeconds, "took " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << cells << "/" << cells << " cells match, mpg=number supp=string dose=number, " << secs << " s < "
     << kFixtureSeconds << " s";
  return os.str();
}

std::string method_contrast() {
  fixture::SampleFixture fx = fixture::sample_fixture();
  fixture::TempDir tmp;
  std::string path = tmp.file("iris.pdf");
  fixture::write_file(path, fx.pdf);
  pdftables::DocumentHandle doc = pdftables::open_document(path);

  ExtractionOptions opts;
  opts.guess = false;
  opts.pages = std::vector<int>{2};
  opts.area = std::vector<PageRect>{to_page_rect(fx.tables[1].area)};

  opts.method = Method::kStream;
  std::vector<RawTable> stream = pdftables::extract_tables(doc, opts);
  expect(stream.size() == 1, "stream returned " + std::to_string(stream.size()) + " tables");
  auto typed = pdftables::make_typed(stream[0], true);
  expect(typed.rows.size() == 5 && typed.names.size() == 5,
         "stream shape " + std::to_string(typed.rows.size()) + "x" + std::to_string(typed.names.size()));
  const double want[] = {5.1, 3.5, 1.4, 0.2};
  for (int c = 0; c < 4; ++c) {
    auto v = pdftables::parse_number(typed.rows[0][c]);
    expect(typed.types[c] == pdftables::ColumnType::kNumber && v && *v == want[c],
           "stream first row cell " + std::to_string(c) + " = " + typed.rows[0][c]);
  }
  expect(typed.rows[0][4] == "setosa", "stream first row species " + typed.rows[0][4]);

  opts.method = Method::kLattice;
  std::vector<RawTable> lattice = pdftables::extract_tables(doc, opts);
  expect(lattice.size() == 1, "lattice returned " + std::to_string(lattice.size()) + " tables");
  auto ltyped = pdftables::make_typed(lattice[0], true);
  expect(ltyped.rows.size() == 1, "lattice data rows " + std::to_string(ltyped.rows.size()));
  const std::string first = "5.10\r4.90\r4.70\r4.60\r5.00";
  expect(ltyped.rows[0][0] == first, "lattice first cell differs");
  return "stream 5x5 first row (5.1, 3.5, 1.4, 0.2, setosa); lattice 1 row, first cell exact";
}

std::string area_extraction() {
  fixture::SampleFixture fx = fixture::sample_fixture();
  fixture::TempDir tmp;
  std::string path = tmp.file("areas.pdf");
  fixture::write_file(path, fx.pdf);
  auto rect_arg = [](const fixture::Rect& r) {
    std::ostringstream os;
    os << r.top << "," << r.left << "," << r.bottom << "," << r.right;
    return os.str();
  };
  std::string out;
  int code = run({"extract", path, "--pages", "2", "--pages", "2", "--area", rect_arg(fx.tables[1].area), "--area",
                  rect_arg(fx.tables[2].area), "--no-guess", "--format", "csv", "--out", "-"},
                 &out);
  expect(code == 0, "extract exit code " + std::to_string(code));
  // Tables on stdout are separated by one blank line.
  std::size_t split = out.find("\n\n");
  expect(split != std::string::npos, "expected two tables on stdout");
  fixture::Grid first = fixture::parse_delimited(out.substr(0, split + 1), ',');
  fixture::Grid second = fixture::parse_delimited(out.substr(split + 2), ',');
  expect_cells(first, fx.tables[1].cells, "first area");
  expect_cells(second, fx.tables[2].cells, "second area");
  return "2 areas in order, 60/60 cells match";
}

std::string property_suite() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(kSeed);

  // (a) random tables by the matching method, (b) lattice == stream on ruled
  // single-line tables.
  fixture::PdfBuilder pdf;
  std::vector<fixture::PlacedTable> placed;
  for (int i = 0; i < kRandomTables; ++i) {
    auto rules = i % 2 == 0 ? fixture::Rules::kGrid : fixture::Rules::kNone;
    placed.push_back(fixture::random_table(rng, pdf, i + 1, rules));
  }
  fixture::TempDir tmp;
  std::string path = tmp.file("random.pdf");
  fixture::write_file(path, pdf.build());
  pdftables::DocumentHandle doc = pdftables::open_document(path);
  int matched = 0, cross = 0;
  for (const auto& t : placed) {
    ExtractionOptions opts;
    opts.guess = false;
    opts.pages = std::vector<int>{t.page};
    opts.area = std::vector<PageRect>{to_page_rect(t.area)};
    opts.method = t.rules == fixture::Rules::kGrid ? Method::kLattice : Method::kStream;
    auto got = pdftables::extract_tables(doc, opts);
    expect(got.size() == 1, "page " + std::to_string(t.page) + ": " + std::to_string(got.size()) + " tables");
    expect_cells(got[0].cells, t.cells, "page " + std::to_string(t.page));
    ++matched;
    if (t.rules == fixture::Rules::kGrid) {
      opts.method = Method::kStream;
      auto other = pdftables::extract_tables(doc, opts);
      expect(other.size() == 1, "cross-oracle table count on page " + std::to_string(t.page));
      expect_cells(other[0].cells, got[0].cells, "lattice vs stream page " + std::to_string(t.page));
      ++cross;
    }
  }

  // (c) split then merge.
  for (int i = 0; i < kRoundTrips; ++i) {
    std::uniform_int_distribution<int> npages(2, 6);
    std::vector<std::vector<std::string>> lines;
    std::string bytes = fixture::random_text_document(rng, npages(rng), &lines);
    fixture::TempDir dir;
    fixture::write_file(dir.file("doc.pdf"), bytes);
    auto original = pdftables::open_document(dir.file("doc.pdf"));
    auto parts = pdftables::split_pdf(original, dir.path());
    std::vector<std::string> sources;
    for (const auto& p : parts) sources.push_back(p.string());
    auto merged = pdftables::merge_pdfs(sources, dir.path() / "merged.pdf");
    expect(merged.n_pages == original.n_pages, "round trip page count");
    expect(pdftables::extract_text(merged) == pdftables::extract_text(original), "round trip text");
  }

  // (d) determinism of the command-line output.
  fixture::write_file(tmp.file("basic.pdf"), fixture::sample_fixture().pdf);
  std::string a, b, c, d;
  run({"extract", tmp.file("basic.pdf"), "--format", "json", "--out", "-"}, &a);
  run({"extract", tmp.file("basic.pdf"), "--format", "json", "--out", "-"}, &b);
  run({"extract", path, "--format", "csv", "--out", "-"}, &c);
  run({"extract", path, "--format", "csv", "--out", "-"}, &d);
  expect(!a.empty() && a == b && !c.empty() && c == d, "two runs differ");

  // (e) find_cells against exhaustive enumeration.
  int grids = 0;
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 5; ++n) {
      std::uniform_real_distribution<double> step(8, 40), jitter(-0.8, 0.8);
      std::vector<double> ys{50}, xs{40};
      for (int i = 0; i < m; ++i) ys.push_back(ys.back() + step(rng));
      for (int j = 0; j < n; ++j) xs.push_back(xs.back() + step(rng));
      std::vector<pdftables::Ruling> h, v;
      for (double y : ys) h.push_back({pdftables::Orientation::kHorizontal, y, xs.front() + jitter(rng), xs.back() + jitter(rng)});
      for (double x : xs) v.push_back({pdftables::Orientation::kVertical, x, ys.front() + jitter(rng), ys.back() + jitter(rng)});
      auto got = pdftables::find_cells(h, v, 2.0);
      auto want = fixture::brute_force_cells(h, v, 2.0);
      expect(got.size() == static_cast<std::size_t>(m * n), "find_cells count for " + std::to_string(m) + "x" + std::to_string(n));
      expect(got == want, "find_cells differs from enumeration for " + std::to_string(m) + "x" + std::to_string(n));
      ++grids;
    }
  }

  double secs = seconds_since(start);
  expect(secs < kPropertySeconds, "took " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << matched << "/" << kRandomTables << " random tables, " << cross << " lattice=stream, " << kRoundTrips
     << " round trips, deterministic, " << grids << " grids = enumeration, " << secs << " s < " << kPropertySeconds
     << " s";
  return os.str();
}

std::string utility_contracts() {
  fixture::TempDir tmp;
  fixture::PdfBuilder pdf;
  pdf.add_page(612, 792);
  pdf.text(72, 72, "letter", 12);
  pdf.add_page(595.28, 841.89);
  pdf.text(72, 72, "a4", 12);
  std::string bytes = pdf.build();
  std::string path = tmp.file("sizes.pdf");
  fixture::write_file(path, bytes);
  auto doc = pdftables::open_document(path);
  auto dims = pdftables::get_page_dims(doc);
  expect(dims.size() == 2, "page count");
  expect(dims[0].width == 612 && dims[0].height == 792, "letter dims");
  expect(std::abs(dims[1].width - 595.28) <= kDimsTolerance && std::abs(dims[1].height - 841.89) <= kDimsTolerance,
         "A4 dims");

  for (double dpi : {36.0, 72.0, 144.0, 300.0}) {
    fs::path out = tmp.path() / ("dpi" + std::to_string(static_cast<int>(dpi)));
    fs::create_directories(out);
    auto files = pdftables::make_thumbnails(doc, std::nullopt, dpi, out);
    expect(files.size() == 2, "thumbnail count");
    for (std::size_t i = 0; i < 2; ++i) {
      auto [w, h] = png_size(files[i]);
      int want_w = static_cast<int>(std::ceil(dims[i].width * dpi / 72 - 1e-9));
      int want_h = static_cast<int>(std::ceil(dims[i].height * dpi / 72 - 1e-9));
      expect(w == want_w && h == want_h, "thumbnail " + std::to_string(w) + "x" + std::to_string(h) + " at dpi " +
                                             std::to_string(dpi) + ", want " + std::to_string(want_w) + "x" +
                                             std::to_string(want_h));
    }
  }

  // URL source served from a local socket.
  std::string fixture_pdf = fixture::sample_fixture().pdf;
  std::string local = tmp.file("basic.pdf");
  fixture::write_file(local, fixture_pdf);
  httplib::Server server;
  server.Get("/files/basic.pdf", [&](const httplib::Request&, httplib::Response& res) {
    res.set_content(fixture_pdf, "application/pdf");
  });
  int port = server.bind_to_any_port("127.0.0.1");
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  std::string url = "http://127.0.0.1:" + std::to_string(port) + "/files/basic.pdf";
  std::string failure;
  try {
    auto remote = pdftables::open_document(url);
    auto dir = fs::canonical(pdftables::download_dir());
    auto parent = fs::canonical(remote.local_path).parent_path();
    auto temp = fs::canonical(fs::temp_directory_path());
    if (parent != dir) failure = "download not in download_dir";
    if (std::mismatch(temp.begin(), temp.end(), dir.begin()).first != temp.end()) failure = "download_dir outside temp";
    auto from_url = pdftables::extract_tables(remote, ExtractionOptions{});
    auto from_file = pdftables::extract_tables(pdftables::open_document(local), ExtractionOptions{});
    bool same = from_url.size() == from_file.size();
    for (std::size_t i = 0; same && i < from_url.size(); ++i) {
      same = from_url[i].cells == from_file[i].cells && from_url[i].area == from_file[i].area &&
             from_url[i].method == from_file[i].method;
    }
    if (!same) failure = "URL extraction differs from local";
  } catch (const std::exception& e) {
    failure = e.what();
  }
  server.stop();
  thread.join();
  expect(failure.empty(), failure);
  return "thumbnails ceil(pt*dpi/72) at 36/72/144/300 dpi, letter 612x792, A4 within 0.01, URL source in temp dir "
         "and identical";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<std::string()> check;
  };
  const Criterion criteria[] = {
      {"fixture_reproduction", fixture_reproduction},
      {"method_contrast", method_contrast},
      {"area_extraction", area_extraction},
      {"property_suite", property_suite},
      {"utility_contracts", utility_contracts},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    try {
      std::string detail = c.check();
      std::cout << "PASS " << c.name << ": " << detail << std::endl;
    } catch (const Failure& f) {
      ++failed;
      std::cout << "FAIL " << c.name << ": " << f.what << std::endl;
    } catch (const std::exception& e) {
      ++failed;
      std::cout << "FAIL " << c.name << ": exception: " << e.what() << std::endl;
    }
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
