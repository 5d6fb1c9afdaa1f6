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

#include "pdftables/service.hpp"

#include <httplib.h>

#include <charconv>
#include <map>
#include <mutex>

#include <json.hpp>

#include "pdftables/error.hpp"
#include "pdftables/extract.hpp"
#include "pdftables/raster.hpp"
#include "pdftables/stream.hpp"
#include "pdftables/typed.hpp"

namespace pdftables {
namespace {

using json = nlohmann::ordered_json;

constexpr double kDefaultDpi = 144;
constexpr double kMaxDpi = 600;

json number(double v) {
  if (std::nearbyint(v) == v && std::abs(v) < 1e15) return static_cast<std::int64_t>(v);
  return v;
}

HttpReply error_reply(int status, const std::string& message) {
  return HttpReply{status, "application/json", json{{"error", message}}.dump()};
}

std::optional<long> parse_int(const std::string& s) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

const char kIndexHtml[] = R"HTML(<!doctype html>
<html>
<head>
<meta charset="utf-8">
<title>pdftables picker</title>
<style>
body { font-family: sans-serif; margin: 1em; }
#stage { position: relative; display: inline-block; border: 1px solid #999; cursor: crosshair; }
#sel { position: absolute; border: 2px solid #d33; background: rgba(221, 51, 51, 0.1); display: none; }
pre { background: #f4f4f4; padding: 0.5em; max-width: 60em; overflow: auto; }
</style>
</head>
<body>
<div>
  <button id="prev">&lt;</button> page <span id="page">1</span> / <span id="count">?</span>
  <button id="next">&gt;</button>
  method <select id="method"><option>decide</option><option>stream</option><option>lattice</option></select>
  <label><input type="checkbox" id="colnames" checked> header row</label>
</div>
<p id="flags"></p>
<div id="stage"><img id="img" draggable="false"><div id="sel"></div></div>
<pre id="out"></pre>
<script>
const dpi = 144;
let page = 1, nPages = 1, dims = [], start = null, area = null;
const $ = (id) => document.getElementById(id);
function show() {
  $('page').textContent = page;
  $('img').src = '/api/pages/' + page + '/image?dpi=' + dpi;
  $('sel').style.display = 'none';
}
function toPt(e) {
  const r = $('img').getBoundingClientRect();
  const d = dims[page - 1];
  const x = Math.min(Math.max((e.clientX - r.left) * 72 / dpi, 0), d[0]);
  const y = Math.min(Math.max((e.clientY - r.top) * 72 / dpi, 0), d[1]);
  return [x, y];
}
async function preview() {
  const body = {page, area, method: $('method').value, col_names: $('colnames').checked};
  const res = await fetch('/api/extract', {method: 'POST', body: JSON.stringify(body)});
  const data = await res.json();
  $('flags').textContent = '--no-guess --pages ' + page + ' --area ' + area.map((v) => v.toFixed(2)).join(',') +
      ' --method ' + body.method + (body.col_names ? '' : ' --no-col-names');
  $('out').textContent = res.ok ? JSON.stringify(data, null, 1) : 'no table found in selection (' + data.error + ')';
}
$('stage').addEventListener('mousedown', (e) => { start = toPt(e); e.preventDefault(); });
window.addEventListener('mouseup', (e) => {
  if (!start) return;
  const end = toPt(e);
  const s = start;
  start = null;
  if (Math.abs(end[0] - s[0]) < 1 || Math.abs(end[1] - s[1]) < 1) return;
  area = [Math.min(s[1], end[1]), Math.min(s[0], end[0]), Math.max(s[1], end[1]), Math.max(s[0], end[0])];
  const sel = $('sel');
  sel.style.display = 'block';
  sel.style.top = area[0] * dpi / 72 + 'px';
  sel.style.left = area[1] * dpi / 72 + 'px';
  sel.style.height = (area[2] - area[0]) * dpi / 72 + 'px';
  sel.style.width = (area[3] - area[1]) * dpi / 72 + 'px';
  preview();
});
$('prev').onclick = () => { if (page > 1) { page--; show(); } };
$('next').onclick = () => { if (page < nPages) { page++; show(); } };
fetch('/api/doc').then((r) => r.json()).then((d) => {
  nPages = d.n_pages; dims = d.dims; $('count').textContent = nPages; show();
}).catch(() => { $('out').textContent = 'service unreachable'; });
</script>
</body>
</html>
)HTML";

}  // namespace

struct PickerService::Impl {
  DocumentHandle doc;
  ServiceOptions options;
  httplib::Server server;
  mutable std::mutex mutex;
  mutable std::map<int, std::shared_ptr<const PageContent>> contents;
  mutable std::map<std::pair<int, double>, std::shared_ptr<const std::string>> images;

  std::shared_ptr<const PageContent> content(int page) const {
    {
      std::lock_guard lock(mutex);
      if (auto it = contents.find(page); it != contents.end()) return it->second;
    }
    auto c = std::make_shared<const PageContent>(read_page_content(doc, page));
    std::lock_guard lock(mutex);
    return contents.emplace(page, c).first->second;
  }
};

PickerService::PickerService(DocumentHandle doc, ServiceOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->doc = std::move(doc);
  impl_->options = std::move(options);

  auto send = [](httplib::Response& res, const HttpReply& reply) {
    res.status = reply.status;
    res.set_content(reply.body, reply.content_type);
  };
  httplib::Server& srv = impl_->server;
  srv.Get("/api/doc", [this, send](const httplib::Request&, httplib::Response& res) { send(res, doc_info()); });
  srv.Get(R"(/api/pages/([^/]+)/image)", [this, send](const httplib::Request& req, httplib::Response& res) {
    std::string dpi = req.has_param("dpi") ? req.get_param_value("dpi") : "";
    send(res, page_image(req.matches[1], dpi));
  });
  srv.Post("/api/extract", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, preview(req.body));
  });
  if (impl_->options.ui_dir) {
    if (!srv.set_mount_point("/", impl_->options.ui_dir->string())) {
      throw IoError("cannot serve UI directory " + impl_->options.ui_dir->string());
    }
  } else {
    srv.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(kIndexHtml, "text/html; charset=utf-8");
    });
  }
  srv.set_exception_handler([send](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    send(res, error_reply(500, what));
  });
  srv.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) res.set_content(json{{"error", "not found"}}.dump(), "application/json");
  });
}

PickerService::~PickerService() { stop(); }

int PickerService::bind() {
  httplib::Server& srv = impl_->server;
  const ServiceOptions& o = impl_->options;
  if (o.port == 0) {
    int port = srv.bind_to_any_port(o.host);
    if (port < 0) throw IoError("cannot bind " + o.host);
    return port;
  }
  if (!srv.bind_to_port(o.host, o.port)) {
    throw IoError("cannot bind " + o.host + ":" + std::to_string(o.port));
  }
  return o.port;
}

void PickerService::run() { impl_->server.listen_after_bind(); }

void PickerService::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

HttpReply PickerService::doc_info() const {
  json dims = json::array();
  for (const PageDims& d : impl_->doc.page_dims) dims.push_back(json::array({number(d.width), number(d.height)}));
  json body{{"n_pages", impl_->doc.n_pages}, {"dims", dims}};
  return HttpReply{200, "application/json", body.dump()};
}

HttpReply PickerService::page_image(const std::string& page_text, const std::string& dpi_text) const {
  auto page = parse_int(page_text);
  if (!page || *page < 1 || *page > impl_->doc.n_pages) return error_reply(404, "no such page");
  double dpi = kDefaultDpi;
  if (!dpi_text.empty()) {
    auto v = parse_number(dpi_text);
    if (!v || !(*v > 0) || *v > kMaxDpi) return error_reply(400, "dpi must be a number in (0, 600]");
    dpi = *v;
  }
  auto key = std::make_pair(static_cast<int>(*page), dpi);
  {
    std::lock_guard lock(impl_->mutex);
    if (auto it = impl_->images.find(key); it != impl_->images.end()) return HttpReply{200, "image/png", *it->second};
  }
  Bitmap bmp = default_renderer().render(*impl_->doc.pdf, static_cast<std::size_t>(*page - 1), dpi);
  auto png = std::make_shared<const std::string>(encode_png(bmp));
  {
    std::lock_guard lock(impl_->mutex);
    impl_->images.emplace(key, png);
  }
  return HttpReply{200, "image/png", *png};
}

HttpReply PickerService::preview(const std::string& body) const {
  json req = json::parse(body, nullptr, false);
  if (req.is_discarded() || !req.is_object()) return error_reply(400, "request body must be a JSON object");
  if (!req.contains("page") || !req["page"].is_number_integer()) return error_reply(400, "page must be an integer");
  long page = req["page"].get<long>();
  if (page < 1 || page > impl_->doc.n_pages) return error_reply(404, "no such page");
  if (!req.contains("area") || !req["area"].is_array() || req["area"].size() != 4) {
    return error_reply(400, "area must be [top, left, bottom, right]");
  }
  double v[4];
  for (std::size_t i = 0; i < 4; ++i) {
    if (!req["area"][i].is_number()) return error_reply(400, "area must be [top, left, bottom, right]");
    v[i] = req["area"][i].get<double>();
  }
  PageRect area{v[0], v[1], v[2], v[3]};
  const PageDims& dims = impl_->doc.page_dims[static_cast<std::size_t>(page - 1)];
  try {
    check_area(area, dims);
  } catch (const InvalidArgument& e) {
    return error_reply(400, e.what());
  }
  ExtractionOptions opts = impl_->options.extraction;
  opts.guess = false;
  opts.pages = std::vector<int>{static_cast<int>(page)};
  opts.area = std::vector<PageRect>{area};
  opts.columns.reset();
  opts.method = Method::kDecide;
  opts.col_names = true;
  try {
    if (req.contains("method") && !req["method"].is_null()) {
      if (!req["method"].is_string()) return error_reply(400, "method must be a string");
      opts.method = parse_method(req["method"].get<std::string>());
    }
  } catch (const InvalidArgument& e) {
    return error_reply(400, e.what());
  }
  if (req.contains("col_names") && !req["col_names"].is_null()) {
    if (!req["col_names"].is_boolean()) return error_reply(400, "col_names must be a boolean");
    opts.col_names = req["col_names"].get<bool>();
  }

  std::vector<RawTable> tables = extract_page_tables(*impl_->content(static_cast<int>(page)), opts, {area});
  if (tables.empty()) return error_reply(422, "no table found in the selection");
  TypedTable t = make_typed(tables.front(), opts.col_names);
  json types = json::array();
  for (ColumnType c : t.types) types.push_back(std::string(column_type_name(c)));
  json out{{"page", page},
           {"area", json::array({number(v[0]), number(v[1]), number(v[2]), number(v[3])})},
           {"method", std::string(method_name(t.method))},
           {"names", t.names},
           {"types", types},
           {"rows", table_rows_json(t)},
           {"n_tables", tables.size()}};
  return HttpReply{200, "application/json", out.dump()};
}

}  // namespace pdftables
