#include <cstdio>

int main() {
    std::puts("chatelet: CLI not wired up yet");
    return 1;
}
