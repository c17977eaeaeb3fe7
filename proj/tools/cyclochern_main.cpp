#include <cstdio>

int main()
{
    std::puts("cyclochern: manifest runner not wired up yet");
    return 1;
}
