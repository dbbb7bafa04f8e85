#include <jif/report.hpp>

int main(int argc, char** argv) { return jif::run_cli(argc, argv); }
