// CLI entry point; wired up once the suites land.
int main() { return 0; }
