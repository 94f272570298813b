#include "intval/intval.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

enum Exit { kComputed = 0, kNegative = 1, kUsage = 2 };

struct Failure {
    std::string status;
    std::string message;
};

void check(iv_status s) {
    if (s != IV_OK) throw Failure{iv_status_name(s), iv_last_error()};
}

void usage(const std::string& message) { throw Failure{"usage", message}; }

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using Poly = std::unique_ptr<iv_poly, Deleter<iv_poly, iv_poly_free>>;
using Matrix = std::unique_ptr<iv_matrix, Deleter<iv_matrix, iv_matrix_free>>;
using Order = std::unique_ptr<iv_order, Deleter<iv_order, iv_order_free>>;
using Element = std::unique_ptr<iv_element, Deleter<iv_element, iv_element_free>>;

std::string take(char* s) {
    std::string out = s;
    iv_string_free(s);
    return out;
}

template <class F>
json call_json(F&& f) {
    char* out = nullptr;
    check(f(&out));
    return json::parse(take(out));
}

// Inline JSON, or the contents of a file when the argument names one.
std::string read_arg(const std::string& arg) {
    std::error_code ec;
    if (!arg.empty() && arg.front() != '[' && arg.front() != '{' && std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

Poly load_poly(const std::string& arg) {
    iv_poly* p = nullptr;
    check(iv_poly_from_json(read_arg(arg).c_str(), &p));
    return Poly(p);
}

Matrix load_matrix(const std::string& arg) {
    iv_matrix* m = nullptr;
    check(iv_matrix_from_json(read_arg(arg).c_str(), &m));
    return Matrix(m);
}

Order load_order(const std::string& arg) {
    iv_order* o = nullptr;
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        check(iv_order_from_json(read_arg(arg).c_str(), &o));
    } else if (!arg.empty() && arg.front() == '{') {
        check(iv_order_from_json(arg.c_str(), &o));
    } else {
        check(iv_order_builtin(arg.c_str(), &o));
    }
    return Order(o);
}

Element load_element(const iv_order* o, const std::string& arg) {
    iv_element* x = nullptr;
    check(iv_element_from_json(o, read_arg(arg).c_str(), &x));
    return Element(x);
}

json poly_json(const iv_poly* p) { return call_json([&](char** out) { return iv_poly_to_json(p, out); }); }

std::string poly_text(const iv_poly* p) {
    char* out = nullptr;
    check(iv_poly_to_text(p, &out));
    return take(out);
}

json poly_out(const iv_poly* p) { return {{"coeffs", poly_json(p)}, {"text", poly_text(p)}}; }

json matrix_json(const iv_matrix* m) { return call_json([&](char** out) { return iv_matrix_to_json(m, out); }); }

json element_json(const iv_element* x) { return call_json([&](char** out) { return iv_element_to_json(x, out); }); }

std::string element_text(const iv_element* x) {
    char* out = nullptr;
    check(iv_element_to_text(x, &out));
    return take(out);
}

struct Options {
    std::string order;
    std::string poly;
    std::string matrix;
    std::string element;
    std::string elements;
    std::string mu;
    std::string h;
    std::string quaternion;
    std::string mod;
    std::string name;
    std::uint64_t number = 0;
    std::uint64_t seed = 0;
    std::uint64_t count = 200;
    long bound = 20;
    bool pretty = false;
    bool no_timing = false;
};

struct Outcome {
    json value;
    int exit = kComputed;
};

// Explicit --elements, else residues mod --mod, else a seeded random sample.
json sample_elements(const iv_order* o, const Options& opt, json& inputs) {
    if (!opt.elements.empty()) {
        const auto j = json::parse(read_arg(opt.elements), nullptr, false);
        if (j.is_discarded()) throw Failure{"parse-error", "malformed JSON in --elements"};
        return j;
    }
    json list = json::array();
    if (!opt.mod.empty()) {
        list = call_json([&](char** out) { return iv_residues(o, opt.mod.c_str(), out); });
        inputs["mod"] = opt.mod;
    }
    if (opt.mod.empty() || opt.count > 0) {
        const auto random = call_json([&](char** out) { return iv_random_elements(o, opt.seed, opt.count, opt.bound, out); });
        for (const auto& x : random) list.push_back(x);
        inputs["seed"] = opt.seed;
        inputs["count"] = opt.count;
        inputs["bound"] = opt.bound;
    }
    return list;
}

void require(const std::string& value, const char* flag) {
    if (value.empty()) usage(std::string("missing required option ") + flag);
}

Outcome run(const std::string& command, const Options& opt, json& inputs) {
    Outcome r;
    if (command == "minpoly" || command == "charpoly") {
        require(opt.matrix, "--matrix");
        auto m = load_matrix(opt.matrix);
        inputs["matrix"] = matrix_json(m.get());
        iv_poly* p = nullptr;
        check(command == "minpoly" ? iv_matrix_minpoly(m.get(), &p) : iv_matrix_charpoly(m.get(), &p));
        r.value = poly_out(Poly(p).get());
    } else if (command == "integral-check") {
        int integral = 0;
        iv_poly* mu = nullptr;
        if (!opt.matrix.empty()) {
            auto m = load_matrix(opt.matrix);
            inputs["matrix"] = matrix_json(m.get());
            check(iv_matrix_is_integral(m.get(), &integral));
            check(iv_matrix_minpoly(m.get(), &mu));
        } else {
            require(opt.order, "--order or --matrix");
            require(opt.element, "--element");
            auto o = load_order(opt.order);
            auto x = load_element(o.get(), opt.element);
            inputs["order"] = opt.order;
            inputs["element"] = element_json(x.get());
            check(iv_element_is_integral(x.get(), &integral));
            check(iv_element_minpoly(x.get(), &mu));
        }
        r.value = {{"integral", integral != 0}, {"minimal_polynomial", poly_out(Poly(mu).get())}};
    } else if (command == "spectrum") {
        require(opt.matrix, "--matrix");
        auto m = load_matrix(opt.matrix);
        inputs["matrix"] = matrix_json(m.get());
        iv_poly* s = nullptr;
        check(iv_matrix_spectrum(m.get(), &s));
        Poly sp(s);
        r.value = {{"spectrum", poly_out(sp.get())}};
        if (!opt.poly.empty()) {
            auto f = load_poly(opt.poly);
            inputs["poly"] = poly_json(f.get());
            iv_poly* img = nullptr;
            check(iv_image_spectrum(sp.get(), f.get(), &img));
            r.value["image_spectrum"] = poly_out(Poly(img).get());
        }
    } else if (command == "member-int") {
        require(opt.poly, "--poly");
        require(opt.order, "--order");
        auto f = load_poly(opt.poly);
        auto o = load_order(opt.order);
        inputs["poly"] = poly_json(f.get());
        inputs["order"] = opt.order;
        r.value = call_json([&](char** out) { return iv_member_int(f.get(), o.get(), out); });
        if (r.value["verdict"] == "no") r.exit = kNegative;
    } else if (command == "member-intval") {
        require(opt.poly, "--poly");
        require(opt.order, "--order");
        auto f = load_poly(opt.poly);
        auto o = load_order(opt.order);
        inputs["poly"] = poly_json(f.get());
        inputs["order"] = opt.order;
        // Without an explicit list the question is about all of A.
        const bool whole = opt.elements.empty();
        const auto xs = sample_elements(o.get(), opt, inputs).dump();
        r.value = call_json([&](char** out) { return iv_member_intval_on(f.get(), o.get(), xs.c_str(), whole, out); });
        if (r.value["verdict"] == "no") r.exit = kNegative;
    } else if (command == "pullback") {
        require(opt.poly, "--poly");
        auto f = load_poly(opt.poly);
        inputs["poly"] = poly_json(f.get());
        Poly mu;
        if (!opt.mu.empty()) {
            mu = load_poly(opt.mu);
        } else {
            require(opt.order, "--mu or --order");
            require(opt.element, "--element");
            auto o = load_order(opt.order);
            auto x = load_element(o.get(), opt.element);
            inputs["order"] = opt.order;
            inputs["element"] = element_json(x.get());
            iv_poly* p = nullptr;
            check(iv_element_minpoly(x.get(), &p));
            mu.reset(p);
        }
        inputs["mu"] = poly_json(mu.get());
        int member = 0;
        check(iv_pullback_member(f.get(), mu.get(), &member));
        r.value = {{"member", member != 0}, {"mu", poly_out(mu.get())}};
        if (!member) r.exit = kNegative;
    } else if (command == "certificate") {
        require(opt.poly, "--poly");
        require(opt.order, "--order");
        auto f = load_poly(opt.poly);
        auto o = load_order(opt.order);
        inputs["poly"] = poly_json(f.get());
        inputs["order"] = opt.order;
        iv_poly* p = nullptr;
        check(iv_certificate_phi(f.get(), o.get(), &p));
        Poly phi(p);
        int degree = 0;
        check(iv_poly_degree(phi.get(), &degree));
        const auto xs = sample_elements(o.get(), opt, inputs).dump();
        const auto v = call_json([&](char** out) { return iv_verify_certificate(phi.get(), f.get(), o.get(), xs.c_str(), out); });
        r.value = {{"certificate", poly_json(phi.get())}, {"degree", degree}, {"verification", v}};
        if (v["holds"] != true) r.exit = kNegative;
    } else if (command == "scaling") {
        require(opt.poly, "--poly");
        require(opt.order, "--order");
        require(opt.h, "--outer");
        auto f = load_poly(opt.poly);
        auto h = load_poly(opt.h);
        auto o = load_order(opt.order);
        inputs["poly"] = poly_json(f.get());
        inputs["h"] = poly_json(h.get());
        inputs["order"] = opt.order;
        const auto xs = sample_elements(o.get(), opt, inputs).dump();
        r.value = call_json([&](char** out) { return iv_scaling_lemma_check(f.get(), h.get(), o.get(), xs.c_str(), out); });
        if (r.value["holds"] != true) r.exit = kNegative;
    } else if (command == "chain") {
        require(opt.poly, "--poly");
        require(opt.order, "--order");
        auto f = load_poly(opt.poly);
        auto o = load_order(opt.order);
        inputs["poly"] = poly_json(f.get());
        inputs["order"] = opt.order;
        const auto xs = sample_elements(o.get(), opt, inputs).dump();
        r.value = call_json([&](char** out) { return iv_chain_check(f.get(), o.get(), xs.c_str(), out); });
        if (r.value["implications_intact"] != true) r.exit = kNegative;
    } else if (command == "three-squares") {
        inputs["n"] = opt.number;
        r.value = call_json([&](char** out) { return iv_three_squares(opt.number, out); });
    } else if (command == "hurwitz-match") {
        auto o = load_order("hurwitz");
        iv_element* q = nullptr;
        if (!opt.quaternion.empty()) {
            check(iv_hurwitz_from_quaternion(o.get(), read_arg(opt.quaternion).c_str(), &q));
        } else {
            require(opt.element, "--element or --quaternion");
            check(iv_element_from_json(o.get(), read_arg(opt.element).c_str(), &q));
        }
        Element x(q);
        const auto quat = [](const iv_element* e) {
            return call_json([&](char** out) { return iv_hurwitz_to_quaternion(e, out); });
        };
        inputs["quaternion"] = quat(x.get());
        iv_element* m = nullptr;
        check(iv_hurwitz_match(x.get(), &m));
        Element match(m);
        iv_poly* mu = nullptr;
        check(iv_element_minpoly(match.get(), &mu));
        r.value = {{"match", element_json(match.get())},
                   {"match_text", element_text(match.get())},
                   {"match_quaternion", quat(match.get())},
                   {"minimal_polynomial", poly_out(Poly(mu).get())}};
    } else if (command == "density") {
        inputs["check"] = opt.name;
        inputs["seed"] = opt.seed;
        inputs["count"] = opt.count;
        r.value = call_json([&](char** out) { return iv_density_report(opt.name.c_str(), opt.seed, opt.count, out); });
        if (!r.value["failures"].empty()) r.exit = kNegative;
    } else if (command == "examples") {
        inputs["name"] = opt.name;
        inputs["seed"] = opt.seed;
        inputs["count"] = opt.count;
        r.value = call_json([&](char** out) { return iv_example_report(opt.name.c_str(), opt.seed, opt.count, out); });
        if (r.value["all_pass"] != true) r.exit = kNegative;
    } else {
        usage("unknown subcommand '" + command + "'");
    }
    return r;
}

void emit(const json& report, bool pretty) { std::cout << report.dump(pretty ? 2 : -1) << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integer-valued and integral-valued polynomials on Z-orders"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    bool compact = true;
    app.add_flag("--json", compact, "Compact JSON report (default)");
    app.add_flag("--pretty", opt.pretty, "Indent the JSON report");
    app.add_flag("--no-timing", opt.no_timing, "Report elapsed_ms as 0");

    const auto with = [&](CLI::App* sub, std::initializer_list<const char*> flags) {
        for (std::string f : flags) {
            if (f == "order") sub->add_option("--order", opt.order, "Built-in name, order JSON file or inline JSON");
            if (f == "poly") sub->add_option("--poly", opt.poly, "Coefficient array (ascending), inline or file");
            if (f == "matrix") sub->add_option("--matrix", opt.matrix, "Row-major matrix, inline or file");
            if (f == "element") sub->add_option("--element", opt.element, "Coordinate array in the order's basis");
            if (f == "elements") sub->add_option("--elements", opt.elements, "Array of coordinate arrays");
            if (f == "mu") sub->add_option("--mu", opt.mu, "Monic integer polynomial");
            if (f == "h") sub->add_option("--outer", opt.h, "Integer polynomial h applied after f");
            if (f == "mod") sub->add_option("--mod", opt.mod, "Include every residue mod m in the sample");
            if (f == "sample") {
                sub->add_option("--seed", opt.seed, "Sampling seed")->capture_default_str();
                sub->add_option("--count", opt.count, "Sample size")->capture_default_str();
                sub->add_option("--bound", opt.bound, "Coordinate bound for random elements")->capture_default_str();
            }
        }
    };

    auto* minpoly = app.add_subcommand("minpoly", "Minimal polynomial of a matrix");
    with(minpoly, {"matrix"});
    auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of a matrix");
    with(charpoly, {"matrix"});
    auto* integral = app.add_subcommand("integral-check", "Integrality of a matrix or an algebra element");
    with(integral, {"matrix", "order", "element"});
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectrum of a matrix, and its image under --poly");
    with(spectrum_cmd, {"matrix", "poly"});
    auto* mi = app.add_subcommand("member-int", "Decide f(A) in A");
    with(mi, {"poly", "order"});
    auto* miv = app.add_subcommand("member-intval", "Check f(a) integral on a sample of A");
    with(miv, {"poly", "order", "elements", "mod", "sample"});
    auto* pb = app.add_subcommand("pullback", "f in Z[X] + mu Q[X]");
    with(pb, {"poly", "mu", "order", "element"});
    auto* cert = app.add_subcommand("certificate", "Build the certificate phi and verify it on a sample");
    with(cert, {"poly", "order", "elements", "mod", "sample"});
    auto* scal = app.add_subcommand("scaling", "Check d^(n-1) h(f) in the sampled pullbacks");
    with(scal, {"poly", "order", "h", "elements", "mod", "sample"});
    auto* chain = app.add_subcommand("chain", "Pullback / Int / IntVal implications on a sample");
    with(chain, {"poly", "order", "elements", "mod", "sample"});
    auto* ts = app.add_subcommand("three-squares", "Decompose n as a sum of three squares");
    ts->add_option("n", opt.number, "Nonnegative integer")->required();
    auto* hm = app.add_subcommand("hurwitz-match", "Hurwitz-order element with the same minimal polynomial");
    with(hm, {"element"});
    hm->add_option("--quaternion", opt.quaternion, "[q0, q1, q2, q3] for q0 + q1 i + q2 j + q3 k");
    auto* dens = app.add_subcommand("density", "Density experiments: three-squares, hurwitz, triangular, companion, refute");
    dens->add_option("check", opt.name, "Which experiment")->required();
    with(dens, {"sample"});
    auto* ex = app.add_subcommand("examples", "Worked examples: zsqrt3, hurwitz, lipschitz, triangular, companion");
    ex->add_option("name", opt.name, "Which example")->required();
    with(ex, {"sample"});

    std::string command = "intval";
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        for (auto* sub : app.get_subcommands()) command = sub->get_name();
        std::string message = e.what();
        if (app.get_subcommands().empty()) {
            for (int i = 1; i < argc; ++i) {
                if (argv[i][0] != '-') {
                    message = "unknown subcommand '" + std::string(argv[i]) + "'";
                    break;
                }
            }
        }
        emit({{"command", command}, {"inputs", json::object()}, {"error", {{"status", "usage"}, {"message", message}}},
              {"elapsed_ms", 0}},
             opt.pretty);
        return kUsage;
    }
    command = app.get_subcommands().front()->get_name();

    json inputs = json::object();
    const auto start = std::chrono::steady_clock::now();
    json report;
    int code = kComputed;
    try {
        auto outcome = run(command, opt, inputs);
        report = {{"command", command}, {"inputs", inputs}, {"outcome", outcome.value}};
        code = outcome.exit;
    } catch (const Failure& f) {
        report = {{"command", command}, {"inputs", inputs}, {"error", {{"status", f.status}, {"message", f.message}}}};
        code = kUsage;
    } catch (const json::exception& e) {
        report = {{"command", command}, {"inputs", inputs}, {"error", {{"status", "parse-error"}, {"message", e.what()}}}};
        code = kUsage;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    report["elapsed_ms"] = opt.no_timing ? 0 : ms.count();
    emit(report, opt.pretty);
    return code;
}
