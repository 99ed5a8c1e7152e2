// Copyright 2026 The explmine Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "explmine/review.h"
#include "httplib.h"

namespace explmine {

namespace {

void Send(httplib::Response& res, const ApiResponse& r) {
  res.status = r.status;
  for (const auto& [k, v] : r.headers) res.set_header(k, v);
  res.set_content(r.body, "application/json");
}

std::optional<std::string> Param(const httplib::Request& req, const char* name) {
  if (!req.has_param(name)) return std::nullopt;
  return req.get_param_value(name);
}

}  // namespace

struct ReviewServer::Impl {
  ReviewService& service;
  httplib::Server server;
};

ReviewServer::ReviewServer(ReviewService& service)
    : impl_(new Impl{service, httplib::Server()}) {
  auto& srv = impl_->server;
  ReviewService& svc = impl_->service;
  srv.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                           {"Access-Control-Expose-Headers", "X-Total-Count"}});
  srv.Options(R"(/api/v1/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  srv.Get("/api/v1/candidates", [&svc](const httplib::Request& req, httplib::Response& res) {
    const auto stage = Param(req, "stage");
    const auto offset = Param(req, "offset");
    const auto limit = Param(req, "limit");
    auto view = [](const std::optional<std::string>& s) -> std::optional<std::string_view> {
      if (!s) return std::nullopt;
      return std::string_view(*s);
    };
    Send(res, svc.ListCandidates(view(stage), view(offset), view(limit)));
  });
  srv.Get(R"(/api/v1/candidates/([^/]+))",
          [&svc](const httplib::Request& req, httplib::Response& res) {
            Send(res, svc.GetCandidate(req.matches[1].str()));
          });
  srv.Post("/api/v1/labels", [&svc](const httplib::Request& req, httplib::Response& res) {
    Send(res, svc.PostLabel(req.body));
  });
  srv.Get("/api/v1/stats", [&svc](const httplib::Request&, httplib::Response& res) {
    Send(res, svc.Stats());
  });
  srv.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      res.set_content("{\"error\":\"not found\"}", "application/json");
    }
  });
}

ReviewServer::~ReviewServer() = default;

int ReviewServer::Bind(const std::string& host, int port) {
  int bound = port;
  if (port == 0) {
    bound = impl_->server.bind_to_any_port(host);
  } else if (!impl_->server.bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) throw Error("cannot listen on " + host + ":" + std::to_string(port));
  return bound;
}

void ReviewServer::Run() { impl_->server.listen_after_bind(); }

void ReviewServer::Stop() { impl_->server.stop(); }

}  // namespace explmine
