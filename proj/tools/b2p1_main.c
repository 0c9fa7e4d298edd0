#include "b2p1/b2p1.h"

int main(int argc, char** argv) { return b2p1_run_cli(argc, (const char* const*)argv); }
