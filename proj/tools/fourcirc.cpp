/*
   Copyright 2026 The fourcirc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// fourcirc: command-line front end for four circulant code experiments.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fourcirc.hpp"
#include "fourcirc/report.hpp"

namespace {

using namespace fourcirc;

struct Args {
    std::string q = "2";
    std::size_t n = 3;
    std::string a, b;
    std::string modulus;
    std::optional<std::uint64_t> cap;
    unsigned workers = default_workers();
    std::string format = "json";
    std::string output;
    std::size_t top = 10;
    std::uint64_t limit = 1000;
    bool distances = false;
    bool inverse = false;
    double t = 0.0;
    double y = 0.0;
    std::string lemma;
};

FieldPtr parse_field(const std::string& spec, const std::string& modulus) {
    std::uint64_t p = 0, k = 1;
    const auto caret = spec.find('^');
    try {
        if (caret == std::string::npos) {
            auto pk = as_prime_power(std::stoull(spec));
            if (!pk) throw ValidationError("q = " + spec + " is not a prime power");
            p = pk->first;
            k = pk->second;
        } else {
            p = std::stoull(spec.substr(0, caret));
            k = std::stoull(spec.substr(caret + 1));
        }
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const ValidationError*>(&e)) throw;
        throw ValidationError("cannot parse field designation \"" + spec + "\"");
    }
    if (p > kMaxFieldOrder || k > 16) throw ValidationError("field " + spec + " is beyond the supported size");
    std::optional<std::vector<std::uint32_t>> mod;
    if (!modulus.empty()) {
        mod.emplace();
        for (auto v : parse_coeff_list(modulus)) mod->push_back(static_cast<std::uint32_t>(v));
    }
    return GaloisField::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k), std::move(mod));
}

std::uint64_t parse_q_integer(const std::string& spec) {
    const auto caret = spec.find('^');
    try {
        if (caret == std::string::npos) return std::stoull(spec);
        return checked_pow(std::stoull(spec.substr(0, caret)), std::stoull(spec.substr(caret + 1)));
    } catch (const std::logic_error&) {
        throw ValidationError("cannot parse q = \"" + spec + "\"");
    }
}

std::uint64_t resolve_cap(const Args& args) {
    if (args.cap) return *args.cap;
    if (const char* env = std::getenv("FOURCIRC_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::logic_error&) {
            throw ValidationError("FOURCIRC_CAP is not an integer");
        }
    }
    return kDefaultWorkloadCap;
}

FourCirculantCode parse_code(const FieldPtr& F, const Args& args) {
    if (args.a.empty() || args.b.empty()) throw ValidationError("--a and --b are required");
    return FourCirculantCode(parse_ring_elem(F, args.n, args.a), parse_ring_elem(F, args.n, args.b));
}

void emit(const std::string& kind, const json& doc, const Args& args) {
    std::string text;
    if (args.format == "json")
        text = doc.dump(2) + "\n";
    else if (args.format == "csv")
        text = report::to_csv(kind, doc.at("report"));
    else
        text = report::to_text(kind, doc.at("report"));
    if (args.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(args.output, std::ios::binary);
    if (!out || !(out << text)) throw ValidationError("cannot write " + args.output);
}

int run(const std::string& cmd, const Args& args, const std::string& command_line) {
    const auto start = std::chrono::steady_clock::now();
    RunManifest manifest{command_line, nullptr, resolve_cap(args), args.workers, 0.0};
    json body;
    auto field = [&] {
        manifest.field = parse_field(args.q, args.modulus);
        return manifest.field;
    };

    if (cmd == "factor") {
        body = report::factorization(factor_xn_minus_1(args.n, field()));
    } else if (cmd == "check") {
        body = report::check(parse_code(field(), args));
    } else if (cmd == "distance") {
        body = report::distance(parse_code(field(), args).min_distance({manifest.cap, args.workers}));
    } else if (cmd == "crt") {
        const auto code = parse_code(field(), args);
        body = {{"constituents", report::constituents(decompose(code))}};
    } else if (cmd == "enumerate") {
        EnumerateOptions opts{args.distances, manifest.cap, args.workers, {}};
        body = report::census(enumerate_self_dual(field(), args.n, opts));
    } else if (cmd == "search") {
        EnumerateOptions opts{true, manifest.cap, args.workers, [](std::uint64_t done, std::uint64_t total) {
                                  std::cerr << "search: measured " << done << " / " << total << " codes\n";
                              }};
        const auto F = field();
        body = report::search(F, args.n, search_best(F, args.n, args.top, opts));
    } else if (cmd == "counts") {
        const auto F = field();
        if (args.lemma == "4.1" || args.lemma == "squares")
            body = report::counts("x^2 + y^2 = -1", F->q(), count_sum_of_squares(*F));
        else if (args.lemma == "4.2" || args.lemma == "hermitian")
            body = report::counts("a^(1+q) + b^(1+q) = -1", F->q(), count_hermitian(*F, manifest.cap));
        else
            throw ValidationError("--lemma must be 4.1 (squares) or 4.2 (hermitian)");
    } else if (cmd == "artin") {
        const std::uint64_t q = parse_q_integer(args.q);
        const auto scan = artin_scan(q, args.limit);
        if (scan.q_is_square) std::cerr << "warning: q = " << q << " is a perfect square; expect few or no primitive-root primes\n";
        body = report::artin(q, args.limit, scan);
    } else if (cmd == "bound") {
        body = report::bound(expurgation_bound(*field(), args.n));
    } else if (cmd == "entropy") {
        const std::uint64_t q = parse_q_integer(args.q);
        if (args.inverse)
            body = {{"q", q}, {"y", args.y}, {"t", entropy_inverse(q, args.y)}};
        else
            body = {{"q", q}, {"t", args.t}, {"entropy", entropy(q, args.t)}};
    } else {
        throw ValidationError("unknown subcommand " + cmd);
    }

    manifest.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(cmd, report::envelope(cmd, manifest, std::move(body)), args);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-dual four circulant codes: construction, checks, enumeration and bounds", "fourcirc"};
    app.require_subcommand(1);
    app.fallthrough();
    Args args;

    app.add_option("--q", args.q, "field designation p^k (or a prime power)");
    app.add_option("--n", args.n, "circulant order n (code length 4n)");
    app.add_option("--modulus", args.modulus, "ascending modulus coefficients c0,...,ck for F_{p^k}");
    app.add_option("--cap", args.cap, "workload cap (default 2^26, or FOURCIRC_CAP)");
    app.add_option("--workers", args.workers, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--format", args.format, "output format")->check(CLI::IsMember({"json", "text", "csv"}));
    app.add_option("--output", args.output, "write the report to this file instead of stdout");

    app.add_subcommand("factor", "factor x^n - 1 into self-reciprocal factors and reciprocal pairs");
    for (const char* name : {"check", "distance", "crt"}) {
        auto* sub = app.add_subcommand(name, std::string(name) == "check"    ? "self-duality and LCD tests for C_{a,b}"
                                             : std::string(name) == "distance" ? "exact minimum distance of C_{a,b}"
                                                                               : "CRT constituents of C_{a,b}");
        sub->add_option("--a", args.a, "a(x) as ascending coefficients")->required();
        sub->add_option("--b", args.b, "b(x) as ascending coefficients")->required();
    }
    app.add_subcommand("enumerate", "count every self-dual pair (a, b)")->add_flag("--distances", args.distances, "also compute minimum distances");
    app.add_subcommand("search", "rank self-dual codes by minimum distance")->add_option("--top", args.top, "number of codes to print");
    app.add_subcommand("counts", "brute-force counting identities")->add_option("--lemma", args.lemma, "4.1 (squares) or 4.2 (hermitian)")->required();
    app.add_subcommand("artin", "primes n with q a primitive root mod n")->add_option("--limit", args.limit, "largest prime to test");
    app.add_subcommand("bound", "finite-n expurgation bound");
    auto* ent = app.add_subcommand("entropy", "q-ary entropy and its inverse");
    ent->add_option("--t", args.t, "argument of H_q");
    ent->add_flag("--inverse", args.inverse, "invert H_q at --y");
    ent->add_option("--y", args.y, "value to invert");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string command_line = "fourcirc";
    for (int i = 1; i < argc; ++i) command_line += std::string(" ") + argv[i];

    try {
        return run(app.get_subcommands().front()->get_name(), args, command_line);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const WorkloadError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
