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

#include "pdftables/extract.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <optional>
#include <thread>

#include "pdftables/detect.hpp"
#include "pdftables/error.hpp"
#include "pdftables/lattice.hpp"
#include "pdftables/stream.hpp"

namespace pdftables {
namespace {

bool has_text(const RawTable& t) {
  for (const auto& row : t.cells) {
    for (const auto& cell : row) {
      if (!cell.empty()) return true;
    }
  }
  return false;
}

void extract_area(const PageContent& content, const ExtractionOptions& options, const PageRect& area,
                  Method method, std::vector<RawTable>& out) {
  if (method == Method::kDecide) method = resolve_method(options, content, area);
  if (method == Method::kLattice) {
    for (RawTable& t : extract_lattice(content, area, options.lattice)) out.push_back(std::move(t));
  } else {
    out.push_back(extract_stream(content, area, options.columns, options.stream));
  }
}

// Runs fn(i) for i in [0, n) on up to hardware_concurrency threads and
// rethrows the first failure.
template <typename Fn>
void parallel_for(std::size_t n, Fn fn) {
  std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::vector<RawTable> extract_page_tables(const PageContent& content, const ExtractionOptions& options,
                                          const std::vector<PageRect>& areas) {
  std::vector<RawTable> tables;
  if (!areas.empty()) {
    for (const PageRect& area : areas) extract_area(content, options, area, options.method, tables);
  } else if (options.guess) {
    for (const DetectedArea& d : detect_tables(options, content)) {
      Method m = options.method == Method::kDecide ? d.method : options.method;
      extract_area(content, options, d.area, m, tables);
    }
  } else {
    PageRect whole{0, 0, content.dims.height, content.dims.width};
    extract_area(content, options, whole, options.method, tables);
  }
  tables.erase(std::remove_if(tables.begin(), tables.end(), [](const RawTable& t) { return !has_text(t); }),
               tables.end());
  return tables;
}

std::vector<RawTable> extract_tables(const DocumentHandle& doc, const ExtractionOptions& options) {
  options.validate();
  std::vector<int> pages;
  if (options.pages) {
    pages = *options.pages;
    check_pages(doc, pages);
  } else {
    for (int p = 1; p <= doc.n_pages; ++p) pages.push_back(p);
  }
  if (options.area && options.area->size() != pages.size()) {
    throw InvalidArgument("area list has " + std::to_string(options.area->size()) +
                          " entries but the document has " + std::to_string(pages.size()) + " pages");
  }

  // Jobs: one per page, or one per (page, area) pair, in list order.
  struct Job {
    int page;
    std::optional<PageRect> area;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < pages.size(); ++i) {
    jobs.push_back({pages[i], options.area ? std::optional<PageRect>((*options.area)[i]) : std::nullopt});
  }

  std::vector<int> distinct = pages;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<PageContent> contents(distinct.size());
  parallel_for(distinct.size(), [&](std::size_t i) { contents[i] = read_page_content(doc, distinct[i]); });
  auto content_of = [&](int page) -> const PageContent& {
    return contents[std::lower_bound(distinct.begin(), distinct.end(), page) - distinct.begin()];
  };

  std::vector<std::vector<RawTable>> results(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    std::vector<PageRect> areas;
    if (jobs[i].area) areas.push_back(*jobs[i].area);
    results[i] = extract_page_tables(content_of(jobs[i].page), options, areas);
  });

  std::vector<RawTable> tables;
  for (auto& r : results) {
    for (RawTable& t : r) tables.push_back(std::move(t));
  }
  return tables;
}

}  // namespace pdftables
