#include "hk/certify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

struct InputError : std::runtime_error {
    std::string kind;
    InputError(std::string k, const std::string& msg) : std::runtime_error(msg), kind(std::move(k)) {}
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("io", "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("parse", path + ": " + e.what());
    }
}

int emit(const json& j, const std::string& out) {
    std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out);
    if (!f) throw InputError("io", "cannot write " + out);
    f << text;
    return 0;
}

int input_error(const std::string& kind, const std::string& message) {
    std::cout << json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << "\n";
    return 2;
}

hk::IntMatrix algebra_cartan(const std::string& arg) {
    if (arg.size() > 5 && arg.ends_with(".json")) {
        json j = read_json(arg);
        if (j.is_object() && j.contains("cartan")) j = j["cartan"];
        try {
            return j.get<hk::IntMatrix>();
        } catch (const json::exception&) {
            throw InputError("schema", arg + ": expected an integer matrix or {\"cartan\": [[...]]}");
        }
    }
    return hk::cartan_matrix(arg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certificates for tame stratifications of invariant systems"};
    app.require_subcommand(1);

    std::string algebra, descriptor, out, expr;
    int max_d = 3, max_w = 3, max_n = 5;
    std::size_t dim = 0;
    long base = -1;
    bool serial = false;

    auto* report = app.add_subcommand("report", "certificate report for the diagonal case of a semisimple algebra");
    report->add_option("--algebra", algebra, "A1..An, a product like A1xA2, or a JSON Cartan matrix file")->required();
    report->add_option("--out", out, "write the report to this file");
    report->add_flag("--serial", serial, "use the serial enumeration kernel");

    auto* pair = app.add_subcommand("pair-report", "certificate report for a symmetric pair descriptor");
    pair->add_option("--descriptor", descriptor, "descriptor JSON file")->required();
    pair->add_option("--out", out, "write the report to this file");
    pair->add_flag("--serial", serial, "use the serial enumeration kernel");

    auto* bn = app.add_subcommand("verify-bn", "build and re-expand binomial membership certificates");
    bn->add_option("--max-d", max_d, "largest number of fiber coordinates")->check(CLI::Range(1, 6));
    bn->add_option("--max-weight", max_w, "largest integer weight")->check(CLI::Range(1, 6));
    bn->add_option("--max-n", max_n, "largest N")->check(CLI::Range(1, 8));
    bn->add_flag("--serial", serial, "use the serial reference loop");

    auto* fr = app.add_subcommand("fourier", "Fourier transform x -> D, D -> -x of an operator");
    fr->add_option("--expr", expr, "operator text, e.g. \"x1*Dx1 + 2\"")->required();
    fr->add_option("--dim", dim, "number of coordinates")->required()->check(CLI::Range(1, 64));
    fr->add_option("--base", base, "number of x coordinates (default: inferred)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }
    const hk::Exec exec = serial ? hk::Exec::Serial : hk::Exec::Parallel;

    try {
        if (*report) {
            hk::IntMatrix cartan = algebra_cartan(algebra);
            auto alg = hk::chevalley(hk::build_root_system(cartan));
            auto r = hk::certify_diagonal(alg, algebra.ends_with(".json") ? "matrix" : algebra, exec);
            emit(r.json, out);
            return r.certified ? 0 : 1;
        }
        if (*pair) {
            json input = read_json(descriptor);
            auto pd = hk::parse_descriptor(input);
            auto r = hk::certify_pair(pd, input, exec);
            emit(r.json, out);
            return r.certified ? 0 : 1;
        }
        if (*bn) {
            auto s = hk::verify_bn_suite(max_d, max_w, max_n, exec);
            emit(s.to_json(), "");
            return s.failures() == 0 ? 0 : 1;
        }
        if (*fr) {
            std::size_t b = base >= 0 ? static_cast<std::size_t>(base) : hk::infer_base(expr, dim);
            if (b > dim) throw InputError("schema", "--base exceeds --dim");
            auto p = hk::WeylElement::parse(expr, dim, b);
            std::cout << hk::fourier(p).to_string() << "\n";
            return 0;
        }
    } catch (const InputError& e) {
        return input_error(e.kind, e.what());
    } catch (const hk::DescriptorError& e) {
        return input_error("descriptor", e.what());
    } catch (const hk::CartanError& e) {
        return input_error("cartan", e.what());
    } catch (const hk::UnsupportedError& e) {
        return input_error("unsupported", e.what());
    } catch (const std::invalid_argument& e) {
        return input_error("parse", e.what());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
