#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

// Binary locations are injected by the build; these tests drive the real
// executables end to end through a shell.

namespace {

namespace fs = std::filesystem;

struct Res {
    int code = -1;
    std::string out;
};

Res sh(const std::string& cmd) {
    Res r;
    FILE* pipe = ::popen((cmd + " 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string q(const std::string& s) { return "'" + s + "'"; }

const std::string jrel = q(JREL_BIN);
const std::string certcheck = q(CERTCHECK_BIN);

struct TmpDir {
    fs::path path;
    explicit TmpDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("jrel_cli_" + tag + "_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TmpDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool has(const Res& r, const std::string& needle) {
    return r.out.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cases list") {
    Res r = sh(jrel + " cases list");
    CHECK(r.code == 0);
    for (const char* name : {"Sp", "SU", "SO", "Spin", "F4", "E6", "E7", "E8"})
        CHECK(has(r, name));
    CHECK(has(r, "primes"));
}

TEST_CASE("verify: verdicts and exit codes") {
    Res neg = sh(jrel + " verify Sp --prime 2");
    CHECK(neg.code == 1);
    CHECK(has(neg, "case Sp, p=2, source both, window 64, i_max 16"));
    CHECK(has(neg, "minimal multiple of t^1: 8"));
    CHECK(has(neg, "zero at p=2: no"));

    Res pos = sh(jrel + " verify E7 --prime 3 --source printed");
    CHECK(pos.code == 0);
    CHECK(has(pos, "minimal multiple of t^1: 1"));
    CHECK(has(pos, "zero at p=3: yes"));

    CHECK(sh(jrel + " verify E8 --prime 2 --source printed").code == 1);
    Res e83 = sh(jrel + " verify E8 --prime 3 --source printed");
    CHECK(e83.code == 1);
    CHECK(has(e83, "minimal multiple of t^1: 9"));
}

TEST_CASE("verify: certificate emission") {
    TmpDir tmp("emit");
    std::string cert = tmp.file("e7.cert.json");
    Res r = sh(jrel + " verify E7 --prime 3 --source printed --emit-certificate " + q(cert));
    CHECK(r.code == 0);
    CHECK(has(r, "certificate written to "));
    REQUIRE(fs::exists(cert));

    Res ok = sh(certcheck + " " + q(cert));
    CHECK(ok.code == 0);
    CHECK(has(ok, "certificate OK: m=1"));
    CHECK(has(ok, "(claimed p=3)"));

    // negative verdicts have nothing to certify
    Res bad = sh(jrel + " verify Sp --prime 2 --emit-certificate " + q(tmp.file("no.json")));
    CHECK(bad.code == 2);
    CHECK(has(bad, "error: no certificate: verdict is negative (minimal multiple 8"));
    CHECK_FALSE(fs::exists(tmp.file("no.json")));

    // tampering is detected by the standalone checker
    auto doc = nlohmann::json::parse(slurp(cert));
    auto it = doc["combination"].begin();
    doc["combination"][it.key()] = "123456789";
    std::ofstream(tmp.file("tampered.json")) << doc.dump(2);
    Res rej = sh(certcheck + " " + q(tmp.file("tampered.json")));
    CHECK(rej.code == 1);
    CHECK(has(rej, "certificate REJECTED"));

    std::ofstream(tmp.file("garbage.json")) << "not json at all {";
    CHECK(sh(certcheck + " " + q(tmp.file("garbage.json"))).code == 2);
    CHECK(sh(certcheck + " " + q(tmp.file("missing.json"))).code == 2);
}

TEST_CASE("verify: argument errors") {
    Res unknown = sh(jrel + " verify Zap --prime 2");
    CHECK(unknown.code == 2);
    CHECK(has(unknown, "error: unknown case 'Zap'"));
    CHECK(has(unknown, "Sp"));  // suggests the builtins

    Res noprime = sh(jrel + " verify Sp");
    CHECK(noprime.code != 0);
    CHECK(noprime.code != 1);
    CHECK(has(noprime, "--prime"));

    Res badprime = sh(jrel + " verify Sp --prime 5");
    CHECK(badprime.code != 0);

    CHECK(sh(jrel + " bogus").code != 0);
    CHECK(sh(jrel).code != 0);
}

TEST_CASE("expand") {
    Res r = sh(jrel + " expand Sp --lambda 2");
    CHECK(r.code == 0);
    CHECK(has(r, "dim 28"));
    CHECK(has(r, "4*g^0"));

    Res amb = sh(jrel + " expand E8");
    CHECK(amb.code == 2);
    CHECK(has(amb, "pass --prime"));
    CHECK(sh(jrel + " expand E8 --prime 3").code == 0);
}

TEST_CASE("check") {
    Res yes = sh(jrel + " check Sp '16t = 0' --prime 2");
    CHECK(yes.code == 0);
    CHECK(has(yes, "identity: 16*t^1 = 0"));
    CHECK(has(yes, "smallest multiplier in the span: 1"));
    CHECK(has(yes, "holds 2-locally: yes"));

    Res no = sh(jrel + " check F4 't^4 = 2t^2' --prime 2");
    CHECK(no.code == 1);
    CHECK(has(no, "smallest multiplier in the span: 2"));
    CHECK(has(no, "holds 2-locally: no"));

    Res parse = sh(jrel + " check Sp 't^ + 1 = 0' --prime 2");
    CHECK(parse.code == 2);
    CHECK(has(parse, "error: identity parse error at position"));

    TmpDir tmp("idcert");
    std::string cert = tmp.file("sp16.cert.json");
    Res emit = sh(jrel + " check Sp '16t = 0' --prime 2 --emit-certificate " + q(cert));
    CHECK(emit.code == 0);
    Res ok = sh(certcheck + " " + q(cert));
    CHECK(ok.code == 0);
    CHECK(has(ok, "for identity"));

    Res refuse = sh(jrel + " check F4 't^4 = 2t^2' --prime 2 --emit-certificate " +
                    q(tmp.file("no.json")));
    CHECK(refuse.code == 2);
    CHECK(has(refuse, "does not hold 2-locally"));
}

TEST_CASE("report: determinism and certificate files") {
    TmpDir tmp("report");
    std::string cmd = jrel + " report --all --format json --output-dir " + q(tmp.path.string());
    Res a = sh(cmd);
    REQUIRE(a.code == 0);
    Res b = sh(cmd);
    CHECK(a.out == b.out);

    auto doc = nlohmann::json::parse(a.out);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 16);
    int positives = 0;
    for (const auto& entry : doc)
        if (entry["verdict"] == true) {
            ++positives;
            CHECK(entry["case"] == "E7");
            CHECK(entry["certificate_path"] == tmp.file("E7_p3.cert.json"));
        }
    CHECK(positives == 1);
    REQUIRE(fs::exists(tmp.file("E7_p3.cert.json")));
    CHECK(sh(certcheck + " " + q(tmp.file("E7_p3.cert.json"))).code == 0);

    Res md = sh(jrel + " report --all --output-dir " + q(tmp.path.string()));
    CHECK(md.code == 0);
    CHECK(md.out.rfind("# Verification report", 0) == 0);

    // JREL_OUTPUT_DIR is honored when --output-dir is absent
    TmpDir env("reportenv");
    Res viaenv = sh("env JREL_OUTPUT_DIR=" + q(env.path.string()) + " " + jrel +
                    " report --all --format json");
    CHECK(viaenv.code == 0);
    CHECK(fs::exists(env.file("E7_p3.cert.json")));
}

TEST_CASE("user-supplied case files") {
    TmpDir tmp("casefile");
    std::string path = tmp.file("toy.json");
    std::ofstream(path) << R"({
      "name": "toy",
      "circle_weights": ["3/2", "-3/2", 2, -2],
      "recipe": {"spinor": {"x": [3, 3], "parity": "full"}},
      "lambda_powers": [1],
      "primes": [2, 3]
    })";

    Res pos = sh(jrel + " verify " + q(path) + " --prime 2");
    CHECK((pos.code == 0 || pos.code == 1));
    CHECK(has(pos, "case toy, p=2"));
    CHECK(has(pos, "minimal multiple of t^1:"));
    CHECK(has(pos, "warning:"));  // no unit weight in circle_weights

    Res via_flag = sh(jrel + " check toy 't^3 + 2t^0 + t^-3 = 3' --case-file " + q(path) +
                      " --prime 2 --source computed");
    CHECK((via_flag.code == 0 || via_flag.code == 1));
    CHECK(has(via_flag, "holds 2-locally:"));

    Res twice_a = sh(jrel + " verify " + q(path) + " --prime 3");
    Res twice_b = sh(jrel + " verify " + q(path) + " --prime 3");
    CHECK(twice_a.out == twice_b.out);

    std::ofstream(tmp.file("broken.json")) << "{ not json";
    Res broken = sh(jrel + " verify " + q(tmp.file("broken.json")) + " --prime 2");
    CHECK(broken.code == 2);
    CHECK(has(broken, "not valid JSON"));
}
