#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "apolar/cli.hpp"
#include "apolar/io.hpp"
#include "apolar/matrix.hpp"
#include "apolar/numeric.hpp"
#include "apolar/polarity.hpp"
#include "apolar/powersum.hpp"
#include "helpers.hpp"

using namespace apolar;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() / ("apolar-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
  static inline int counter_ = 0;
};

}  // namespace

TEST_CASE("cli polar, pair and cat") {
  TempDir dir;
  const auto f = dir.write("f.json", io::serialize(testing::binary_quartic_golden()));
  auto r = run({"polar", "--form", f, "--point", "1,0"});
  CHECK(r.code == 0);
  CHECK(io::parse_form(r.out) == io::parse_form(R"({"space":"V","nvars":2,"degree":3,"terms":[)"
                                               R"({"exp":[3,0],"coef":"2"},{"exp":[2,1],"coef":"3"},)"
                                               R"({"exp":[1,2],"coef":"3"},{"exp":[0,3],"coef":"1"}]})"));
  r = run({"polar", "--form", f, "--point", "1,2", "--iterate", "4"});
  CHECK(r.code == 0);
  CHECK(io::parse_form(r.out).coefficient(MultiIndex{0, 0}) == 1 + 16 + 81);

  const auto g = dir.write("g.json", io::serialize(power_of_linear(testing::point({1, 2}, PointRole::InV), 4)));
  r = run({"pair", "--g", g, "--f", f});
  CHECK(r.code == 0);
  CHECK(r.out == "98\n");

  r = run({"cat", "--form", f, "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "3 3\n2 1 1\n2 2 2\n1 1 2\n");
  CHECK(RationalMatrix::parse_text(r.out).rows() == 3);
}

TEST_CASE("cli verdicts and exit codes") {
  TempDir dir;
  const auto f = dir.write("f.json", io::serialize(testing::binary_quartic_golden()));
  const Form fermat = Form::monomial(Space::OnV, {4, 0}) + Form::monomial(Space::OnV, {0, 4});
  const auto fe = dir.write("fermat.json", io::serialize(fermat));
  CHECK(run({"nondegenerate", "--form", f}).code == 0);
  CHECK(run({"nondegenerate", "--form", fe}).code == 1);
  CHECK(run({"dual", "--form", f}).code == 1);
  CHECK(run({"dual", "--form", fe}).code == 1);
  const auto cubic = dir.write("cubic.json", io::serialize(random_form(3, 2, 3, 4)));
  CHECK(run({"nondegenerate", "--form", cubic}).code == 2);

  auto r = run({"cat", "--form", dir.file("missing.json"), "--k", "2"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  CHECK(run({"cat", "--form", f, "--k", "2", "--bogus"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const auto bad = dir.write("bad.json", "{\"space\":");
  CHECK(run({"cat", "--form", bad, "--k", "1"}).code == 2);
}

TEST_CASE("cli dual of a quadric re-parses") {
  TempDir dir;
  const auto q = dir.write("q.json", io::serialize(Form::monomial(Space::OnV, {2, 0}) + Form::monomial(Space::OnV, {0, 2}) +
                                                   Form::monomial(Space::OnV, {1, 1})));
  const auto r = run({"dual", "--form", q});
  CHECK(r.code == 0);
  const auto d = io::parse_form(r.out);
  CHECK(d.space() == Space::OnDual);
  const auto back = run({"dual", "--form", dir.write("d.json", r.out)});
  CHECK(io::parse_form(back.out) == io::parse_form(io::read_file(q)));
}

TEST_CASE("cli biquadric") {
  TempDir dir;
  const auto ident = dir.write("id.txt", RationalMatrix::identity(3).to_text());
  auto r = run({"biquadric", "--matrix", ident});
  CHECK(r.code == 1);
  CHECK(r.out.find("1/4") != std::string::npos);
  const auto sym = dir.write("b.txt", biquadric_of(testing::binary_quartic_golden()).to_text());
  r = run({"biquadric", "--matrix", sym});
  CHECK(r.code == 0);
  CHECK(io::parse_form(r.out) == testing::binary_quartic_golden());
  const auto nonsym = dir.write("n.txt", "3 3\n1 1 0\n0 1 0\n0 0 1\n");
  CHECK(run({"biquadric", "--matrix", nonsym}).code == 2);
  const auto odd = dir.write("o.txt", RationalMatrix::identity(4).to_text());
  CHECK(run({"biquadric", "--matrix", odd}).code == 2);
}

TEST_CASE("cli plant then mukai") {
  TempDir dir;
  auto r = run({"vsp", "plant", "--seed", "1", "--nvars", "3"});
  REQUIRE(r.code == 0);
  const auto bundle = dir.write("plant.json", r.out);
  const auto m = run({"vsp", "mukai", "--form", bundle, "--points", bundle});
  CHECK(m.code == 0);
  CHECK(m.out.find("agree=true") != std::string::npos);

  const auto j = nlohmann::json::parse(r.out);
  const Form f = io::parse_form(r.out);
  const auto pts = io::parse_points(r.out, PointRole::InDual);
  CHECK(pts.size() == 6);
  const auto rep = io::parse_representation(r.out, PointRole::InDual);
  CHECK(rep.form() == f);

  const auto v = run({"vsp", "verify", "--form", bundle, "--rep", bundle});
  CHECK(v.code == 0);
  CHECK(v.out == "verified=true\n");
  const auto s = run({"vsp", "solve", "--form", bundle, "--points", bundle});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("status=unique\n", 0) == 0);

  auto moved = pts;
  moved[0] = perturb_point(pts, 0, 5)[0];
  std::string lines;
  for (const auto& p : moved) lines += io::format_point(p) + "\n";
  const auto pm = dir.write("moved.txt", lines);
  const auto neg = run({"vsp", "mukai", "--form", bundle, "--points", pm});
  CHECK(neg.code == 1);
  CHECK(neg.out.find("agree=true") != std::string::npos);
  CHECK(neg.out.find("cond54=false") != std::string::npos);
  CHECK(run({"vsp", "solve", "--form", bundle, "--points", pm}).code == 1);
  CHECK(run({"vsp", "plant", "--nvars", "3"}).code == 2);
}

TEST_CASE("cli decompose output re-parses and verifies") {
  TempDir dir;
  std::vector<RepresentationEntry> entries{{testing::point({1, 2}, PointRole::InDual), 1},
                                           {testing::point({1, -1}, PointRole::InDual), 2}};
  const auto f = dir.write("f.json", io::serialize(Representation(4, entries).form()));
  const std::vector<std::string> args{"vsp", "decompose", "--form", f, "--n", "2", "--restarts", "20", "--seed", "3"};
  const auto r = run(args);
  REQUIRE(r.code == 0);
  CHECK(run(args).out == r.out);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("status") == "converged");
  REQUIRE(!j.at("solutions").empty());
  const auto rep = dir.write("rep.json", j.at("solutions")[0].at("rep").dump());
  const auto d = io::parse_decomposition(io::read_file(rep));
  CHECK(d.terms.size() == 2);
  CHECK(run({"vsp", "verify", "--form", f, "--rep", rep}).code == 0);

  const auto x2y2 = dir.write("x2y2.json", io::serialize(Form::monomial(Space::OnV, {2, 2})));
  const auto none = run({"vsp", "decompose", "--form", x2y2, "--n", "1", "--restarts", "5", "--seed", "1"});
  CHECK(none.code == 3);
  CHECK(nlohmann::json::parse(none.out).at("status") == "no-convergence");
  CHECK(run({"vsp", "decompose", "--form", f, "--n", "2"}).code == 2);
}

TEST_CASE("cli ledger") {
  TempDir dir;
  auto r = run({"ledger", "--d", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("g=3 s=3 n=6") != std::string::npos);
  r = run({"ledger", "--d", "6", "--max-d", "50"});
  CHECK(r.code == 0);
  CHECK(r.out.find("failures=0") != std::string::npos);
  CHECK(run({"ledger", "--d", "4"}).code == 2);
  CHECK(run({"ledger"}).code == 2);
  const auto out = dir.file("ledger.json");
  r = run({"--out", out, "ledger", "--d", "6"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(io::read_file(out)).at("deg_H2") == 3);
}

TEST_CASE("cli output is byte-identical across runs") {
  TempDir dir;
  const auto f = dir.write("f.json", io::serialize(random_form(11, 3, 4, 5)));
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"cat", "--form", f, "--k", "2", "--basis"},
        std::vector<std::string>{"dual", "--form", f},
        std::vector<std::string>{"vsp", "plant", "--seed", "8", "--nvars", "4"},
        std::vector<std::string>{"ledger", "--d", "9"}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli quiet drops framing") {
  TempDir dir;
  const auto bundle = dir.write("p.json", run({"vsp", "plant", "--seed", "2", "--nvars", "2"}).out);
  const auto loud = run({"vsp", "mukai", "--form", bundle, "--points", bundle});
  const auto quiet = run({"--quiet", "vsp", "mukai", "--form", bundle, "--points", bundle});
  CHECK(loud.out.find('#') != std::string::npos);
  CHECK(quiet.out.find('#') == std::string::npos);
  CHECK(quiet.code == loud.code);
}
