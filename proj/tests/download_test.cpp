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

#include <httplib.h>
#include <gtest/gtest.h>

#include <thread>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pdftables/download.hpp"
#include "pdftables/error.hpp"
#include "pdftables/extract.hpp"
#include "pdftables/ingest.hpp"

namespace pdftables {
namespace {

class DownloadTest : public ::testing::Test {
 protected:
  void SetUp() override {
    pdf_ = fixture::sample_fixture().pdf;
    server_.Get("/docs/tables.pdf", [this](const httplib::Request&, httplib::Response& res) {
      ++hits_;
      res.set_content(pdf_, "application/pdf");
    });
    server_.Get("/docs/page.html", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("<html></html>", "text/html");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  void TearDown() override {
    server_.stop();
    thread_.join();
  }
  std::string url(const std::string& path) const { return "http://127.0.0.1:" + std::to_string(port_) + path; }

  std::string pdf_;
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> hits_{0};
};

TEST(IsUrlTest, Schemes) {
  EXPECT_TRUE(is_url("http://example.com/a.pdf"));
  EXPECT_TRUE(is_url("HTTPS://example.com/a.pdf"));
  EXPECT_FALSE(is_url("ftp://example.com/a.pdf"));
  EXPECT_FALSE(is_url("/tmp/http://x"));
}

TEST_F(DownloadTest, LandsInDownloadDirAndExtractsIdentically) {
  DocumentHandle remote = open_document(url("/docs/tables.pdf"));
  EXPECT_EQ(std::filesystem::canonical(remote.local_path.parent_path()),
            std::filesystem::canonical(download_dir()));
  EXPECT_EQ(remote.source, url("/docs/tables.pdf"));
  EXPECT_EQ(source_stem(remote), "tables");

  fixture::TempDir tmp;
  fixture::write_file(tmp.file("tables.pdf"), pdf_);
  auto a = extract_tables(remote, ExtractionOptions{});
  auto b = extract_tables(open_document(tmp.file("tables.pdf")), ExtractionOptions{});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].cells, b[i].cells);
    EXPECT_EQ(a[i].area, b[i].area);
  }
}

TEST_F(DownloadTest, CachesByUrl) {
  auto first = fetch_url(url("/docs/tables.pdf"));
  auto second = fetch_url(url("/docs/tables.pdf"));
  EXPECT_EQ(first, second);
  EXPECT_LE(hits_.load(), 1);
}

TEST_F(DownloadTest, Failures) {
  EXPECT_THROW(open_document(url("/docs/missing.pdf")), UnreachableError);
  EXPECT_THROW(open_document(url("/docs/page.html")), NotPdfError);
  EXPECT_THROW(open_document("http://127.0.0.1:1/nothing.pdf"), UnreachableError);
}

}  // namespace
}  // namespace pdftables
