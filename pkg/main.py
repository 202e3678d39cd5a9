# Entry point for swarm-sqp
from swarm_sqp.cli import main

if __name__ == "__main__":
    main()
