#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "colorlie/driver.hpp"

namespace py = pybind11;

namespace {

// One parsed problem instance; every method returns (exit_code, report_json).
class Instance {
  public:
    explicit Instance(const std::string& json_text) : text_(json_text) {
        file_ = colorlie::parse_algebra_file(json_text);  // throws on bad input
    }

    static Instance from_path(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        return Instance(ss.str());
    }

    std::pair<int, std::string> run(const std::string& command,
                                    const std::map<std::string, std::string>& options) const {
        colorlie::RunResult r = colorlie::run_on_text(command, text_, options);
        return {r.exit_code, r.report.dump()};
    }

    std::string canonical() const { return colorlie::serialize_algebra_file(file_); }

  private:
    std::string text_;
    colorlie::AlgebraFile file_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact computer algebra for twisted enveloping algebras of color Lie algebras";

    py::class_<Instance>(m, "Instance")
        .def(py::init<const std::string&>(), py::arg("json_text"))
        .def_static("from_path", &Instance::from_path, py::arg("path"))
        .def("run", &Instance::run, py::arg("command"),
             py::arg("options") = std::map<std::string, std::string>{},
             "dispatch a subcommand; returns (exit_code, report_json)")
        .def("canonical", &Instance::canonical, "canonical re-serialization of the input");

    m.def(
        "parse_scalar",
        [](const std::string& text, unsigned order) {
            return colorlie::parse_scalar(text, order).to_string();
        },
        py::arg("text"), py::arg("order"),
        "parse a scalar literal in Q(zeta_order) and return its canonical form");
}
