#include <iostream>

#include "common.hpp"
#include "crvar/errors.hpp"

int main(int argc, char** argv) {
  using namespace crvar::cli;
  CLI::App app{"crvar: completely regular semigroup varieties"};
  app.require_subcommand(1);
  Context ctx;
  register_word(app, ctx);
  register_variety(app, ctx);
  register_semigroup(app, ctx);
  register_network(app, ctx);
  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kMalformed;
  } catch (crvar::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return ctx.exit_code;
}
