// placeholder; CLI wired up once the solver stack exists
int main() { return 0; }
