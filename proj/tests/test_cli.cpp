#include "cli.hpp"
#include "fixtures.hpp"

#include "gkz/json_io.hpp"

#include <doctest.h>

#include <sstream>

using namespace gkz;
using namespace gkz::testing;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(GKZ_EXAMPLE_DIR) + "/" + name; }

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "gkz");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

io::Json json_of(const Outcome& o) { return io::parse(o.out); }

}  // namespace

TEST_CASE("subdivide on the running example") {
  Outcome o = call({"subdivide", "--config", data("running_config.json"), "--matrix", data("running_psi.json")});
  REQUIRE(o.code == cli::kOk);
  io::Json j = json_of(o);
  PointConfig cfg = io::config_from_json(j["subdivision"]);
  auto s = io::subdivision_from_json(j["subdivision"]);
  REQUIRE(s);
  CHECK(*s == running_subdivision());
  CHECK(cfg.size() == 5);
  CHECK(j["open_member"] == true);
  CHECK(j["closed_member"] == true);
  CHECK(j["triangulation"] == true);
  CHECK(j["cone_dim"] == 10);
}

TEST_CASE("zero matrix gives the trivial subdivision") {
  Outcome o = call({"subdivide", "--config", data("running_config.json"), "--matrix", data("running_zero_psi.json")});
  REQUIRE(o.code == cli::kOk);
  auto s = io::subdivision_from_json(json_of(o)["subdivision"]);
  REQUIRE(s);
  CHECK(*s == trivial_subdivision(running_config()));
}

TEST_CASE("svg of the lifted simplex shows three triangles") {
  Outcome o = call({"subdivide", "--config", data("simplex_config.json"), "--matrix", data("simplex_lift.json"),
                    "--format", "svg"});
  REQUIRE(o.code == cli::kOk);
  CHECK(o.out.rfind("<svg", 0) == 0);
  std::size_t polys = 0;
  for (auto pos = o.out.find("<polygon"); pos != std::string::npos; pos = o.out.find("<polygon", pos + 1)) ++polys;
  CHECK(polys == 3);
  Outcome again = call({"subdivide", "--config", data("simplex_config.json"), "--matrix", data("simplex_lift.json"),
                        "--format", "svg"});
  CHECK(again.out == o.out);
}

TEST_CASE("svg falls back to the face lattice above dimension two") {
  Outcome o = call({"subdivide", "--config", data("cube_config.json"), "--matrix", data("cube_psi.json"), "--format",
                    "svg"});
  REQUIRE(o.code == cli::kOk);
  CHECK(o.out.find("cell 0") != std::string::npos);
  CHECK(o.out.find("dim 0:") != std::string::npos);
}

TEST_CASE("text output") {
  Outcome o = call({"subdivide", "--config", data("running_config.json"), "--matrix", data("running_psi.json"),
                    "--format", "text"});
  REQUIRE(o.code == cli::kOk);
  CHECK(o.out.find("open_member: true") != std::string::npos);
}

TEST_CASE("fan of the simplex example and of a segment") {
  Outcome o = call({"fan", "--config", data("simplex_config.json")});
  REQUIRE(o.code == cli::kOk);
  io::Json j = json_of(o);
  CHECK(j["count"] == 3);
  CHECK(j["refines"].size() == 2);
  CHECK(j["sampling"]["consistent"] == true);
  Outcome seg = call({"fan", "--config", data("segment_config.json")});
  REQUIRE(seg.code == cli::kOk);
  CHECK(json_of(seg)["count"] == 1);
}

TEST_CASE("fan of the running example matches sampling") {
  Outcome o = call({"fan", "--config", data("running_config.json"), "--samples", "3000", "--seed", "3"});
  REQUIRE(o.code == cli::kOk);
  io::Json j = json_of(o);
  CHECK(j["count"] == 27);
  CHECK(j["sampling"]["consistent"] == true);
  CHECK(j["sampling"]["distinct"] == 27);
}

TEST_CASE("valuate the two-term expression") {
  Outcome o = call({"valuate", "--config", data("running_config.json"), "--matrix", data("running_psi.json"),
                    "--expr", data("running_expr.json")});
  REQUIRE(o.code == cli::kOk);
  io::Json j = json_of(o);
  CHECK(j["V"]["value"] == io::Json::array({"3/2", "1/2"}));
  CHECK(j["nu"]["value"] == io::Json::array({"0", "0"}));
  CHECK(j["V"]["witness"]["eta"] == io::Json({-1}));
  Outcome m = call({"valuate", "--config", data("running_config.json"), "--matrix", data("running_psi.json"),
                    "--expr", data("running_monomial.json")});
  REQUIRE(m.code == cli::kOk);
  io::Json jm = json_of(m);
  CHECK(jm["V"]["value"] == io::Json::array({"2", "1"}));
  CHECK(jm["nu"]["value"] == jm["V"]["value"]);
}

TEST_CASE("liminf reproduces the two accumulation points") {
  Outcome o = call({"liminf", "--config", data("running_config.json"), "--matrix", data("running_psi.json"), "--expr",
                    data("running_expr.json"), "--degree-bound", "16"});
  REQUIRE(o.code == cli::kOk);
  io::Json j = json_of(o);
  CHECK(j["sequence"].size() == 8);
  CHECK(j["sequence"][1]["normalized"] == io::Json::array({"0", "1/2"}));
  CHECK(j["accumulation"] == io::Json::array({io::Json::array({"3/2", "1/2"}), io::Json::array({"3/2", "1"})}));
  CHECK(j["liminf"] == io::Json::array({"3/2", "1/2"}));
  CHECK(j["flag"] == "WINDOWED");
  CHECK(j["resolved"] == true);
}

TEST_CASE("degenerate reports the Stanley-Reisner ideal") {
  Outcome o = call({"degenerate", "--config", data("running_config.json"), "--matrix", data("running_psi.json"),
                    "--degree-bound", "4"});
  REQUIRE(o.code == cli::kOk);
  io::Json j = json_of(o);
  CHECK(j["stanley_reisner"]["nonfaces"] == io::Json::array({io::Json::array({0, 4})}));
  CHECK(j["stanley_reisner"]["nilpotent"] == io::Json({1, 3}));
  CHECK(j["gr_V"]["nilpotent_free"] == true);
  CHECK(!j["gr_nu_reduced"]["nilpotents"].empty());
}

TEST_CASE("commands are deterministic") {
  std::vector<std::string> args{"fan", "--config", data("running_config.json"), "--seed", "5", "--samples", "500"};
  CHECK(call(args).out == call(args).out);
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == cli::kSchema);
  CHECK(call({"bogus"}).code == cli::kSchema);
  CHECK(call({"subdivide", "--config", data("running_config.json")}).code == cli::kSchema);
  CHECK(call({"subdivide", "--config", data("malformed.json"), "--matrix", data("running_psi.json")}).code ==
        cli::kSchema);
  CHECK(call({"subdivide", "--config", data("missing.json"), "--matrix", data("running_psi.json")}).code ==
        cli::kSchema);
  CHECK(call({"subdivide", "--config", data("running_config.json"), "--matrix", data("bad_rational.json")}).code ==
        cli::kSchema);
  CHECK(call({"fan", "--config", data("running_config.json"), "--format", "svg"}).code == cli::kSchema);
  CHECK(call({"subdivide", "--config", data("simplex_config.json"), "--matrix", data("running_psi.json")}).code ==
        cli::kDimension);
  CHECK(call({"valuate", "--config", data("simplex_config.json"), "--matrix", data("simplex_lift.json"), "--expr",
              data("running_expr.json")})
            .code == cli::kDimension);
  CHECK(call({"fan", "--config", data("square_center_config.json"), "--budget", "2"}).code == cli::kBudget);
  Outcome deg = call({"liminf", "--config", data("running_config.json"), "--matrix", data("running_psi.json"),
                      "--expr", data("running_expr.json"), "--degree-bound", "5"});
  CHECK(deg.code == cli::kDegree);
  CHECK(deg.err.find("6") != std::string::npos);
  CHECK(call({"subdivide", "--config", data("running_config.json"), "--matrix", data("running_psi.json"),
              "--degree-bound", "0"})
            .code == cli::kSchema);
  CHECK(call({"--help"}).code == cli::kOk);
}
