#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run
{
  int status = -1;
  std::string out;
};

Run run(const std::string &args)
{
  const std::string cmd = std::string(TFORGE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
    r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

nlohmann::ordered_json results(const Run &r) { return nlohmann::ordered_json::parse(r.out)["results"]; }

} // namespace

TEST_CASE("exit codes")
{
  CHECK(run("nosuchcmd").status == 2);
  CHECK(run("genus --order 2520").status == 2);
  CHECK(run("genus --order 2520 --signature 2,6,11").status == 1);
  CHECK(run("perm conj --t1 '(1,2)(2,3)' --t2 '(1,2)'").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("genus and classification reports")
{
  const auto g = run("genus --order 2520 --signature 2,6,7");
  CHECK(g.status == 0);
  CHECK(results(g)["genus"] == "241");
  const auto d = run("dessins classify --n 7 --mu 2,2,1,1,1 --nu 3,2,2");
  CHECK(d.status == 0);
  CHECK(results(d)["class_count"] == 2);
  const auto c = run("dessins closure --sigma0 '(1,2)' --sigma1 '(2,3)'");
  CHECK(results(c)["genus"] == "0");
  CHECK(results(c)["group_order"] == 6);
}

TEST_CASE("reports round-trip and carry the schema")
{
  const auto r = run("curves iso --genus 6 --a 23 --b 23");
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["schema"] == "tforge-report/1");
  CHECK(j["command"] == "curves iso");
  CHECK(j.dump(2) + "\n" == r.out);
  CHECK(nlohmann::ordered_json::parse(j.dump()) == j);
  CHECK(j["results"]["isomorphic"] == true);
  CHECK(results(run("curves iso --genus 6 --a 7/3 --b 8/3"))["isomorphic"] == false);
}

TEST_CASE("identical inputs give byte-identical reports")
{
  const std::string args = "--seed 5 twocrit solve --n 5 --mu 2,2,1 --nu 3,1,1 --attempts 64";
  const auto a = run(args), b = run("--threads 1 " + args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(run("--seed 6 twocrit solve --n 5 --mu 2,2,1 --nu 3,1,1 --attempts 64").status == 0);
}

TEST_CASE("belyi report serializes large exponents as strings")
{
  const auto r = run("belyi --genus 3 --minpoly -2,0,1");
  CHECK(r.status == 0);
  const auto res = results(r);
  CHECK(res["factored_map"]["exponents"][0].is_string());
  CHECK(res["verified_critical_values"]["rationals"] == nlohmann::ordered_json::array({"0", "1"}));
  CHECK(run("belyi --genus 3 --a 0").status == 1);
}

TEST_CASE("perm and beauville subcommands")
{
  const auto s = run("perm spherical --group C3 --signature 3,3,3");
  CHECK(results(s)["class_count"] == 2);
  const auto h = run("perm hurwitz --group A7 --signature 2,6,7 --outer '(1,2)'");
  CHECK(results(h)["orbit_count"] == 2);
  const auto c = run("perm conj --t1 '(1,2)(3,4);(1,5,7)(2,3)(4,6)' --t2 '(1,2)(3,4);(1,7,4)(2,5)(3,6)'");
  CHECK(results(c)["conjugator"].is_null());
  const auto b = run("beauville check --group A7 --t1 '(1,2)(3,4);(1,5,7)(2,3)(4,6)' "
                     "--t2 '(1,7,6,5,4);(1,3,2,6,7);(2,3,4,5,6)'");
  CHECK(results(b)["beauville"] == true);
  CHECK(results(b)["invariants"]["K2"] == "384");
  CHECK(results(run("beauville search --group A5"))["structure_count"] == 0);
}

TEST_CASE("pi1 on a small group")
{
  const auto r = run("pi1 --group 'gens:(1,2,3,4,5);(6,7,8,9,10)' --t1 '(1,2,3,4,5);(6,7,8,9,10)' "
                     "--t2 '(1,2,3,4,5)(6,8,10,7,9);(1,4,2,5,3)(6,10,9,8,7)'");
  CHECK(r.status == 0);
  CHECK(results(r)["cosets"] == 25);
  CHECK(results(r)["generators"] == 76);
}

TEST_CASE("reproduce-paper names a corrupted triple")
{
  const auto r = run("reproduce-paper --skip-snf --triple1 '(1,2)(3,4);(1,5,7)(2,3)(4,6);(1,7,5,2,4,3,6)'");
  CHECK(r.status == 1);
  const auto res = results(r);
  CHECK(res["failed"][0] == "triple_1");
  bool skipped = false;
  for (const auto &item : res["items"])
    if (item["item"] == "abelianization")
      skipped = item["status"] == "skipped";
  CHECK(skipped);
}
