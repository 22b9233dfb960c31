#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "sweedler/cli.hpp"

int main(int argc, char** argv) {
  using namespace sweedler;

  CLI::App app{"Exact computations with finite-dimensional algebras, coalgebras and measurings"};
  std::string command;
  std::vector<std::string> inputs;
  CommandRequest request;
  std::string output;
  std::string format = "report";
  std::size_t dim = 0;

  app.add_option("command", command, "Operation to run")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("inputs", inputs, "Input documents");
  app.add_option("--budget", request.budget, "Maximum number of candidates an enumeration may visit");
  app.add_option("--seed", request.seed, "Seed recorded in the report");
  app.add_option("--auto-intertwiners", request.auto_intertwiners,
                 "Use every intertwiner between generators (reconstruct)")
      ->default_val(true);
  app.add_option("--output", output, "Write to this file instead of standard output");
  app.add_option("--format", format, "report or document")->check(CLI::IsMember({"report", "document"}));
  app.add_option("--candidates", request.candidates,
                 "Coordinate values for a grouplike search (required over Q)")
      ->delimiter(',');
  auto* dim_opt = app.add_option("--dim", dim, "Representation dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  request.command = *parse_command(command);
  for (const auto& p : inputs) request.inputs.emplace_back(p);
  request.format = format == "document" ? OutputFormat::document : OutputFormat::report;
  if (*dim_opt) request.dim = dim;
  if (!output.empty()) request.output = output;

  CommandResult result = run(request);
  if (request.output) {
    std::ofstream out(*request.output, std::ios::binary);
    out << result.text;
    if (!out) {
      std::cerr << "cannot write " << request.output->string() << "\n";
      return exit_code::io;
    }
  } else {
    std::cout << result.text;
  }
  return result.status;
}
